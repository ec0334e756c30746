#include "atm/script.h"

#include <cctype>
#include <fstream>
#include <sstream>

#include "atm/text.h"

namespace atm {

ScriptSyntaxError::ScriptSyntaxError(std::size_t line,
                                     const std::string& message)
    : Error("script line " + std::to_string(line) + ": " + message),
      line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

class StepParser {
 public:
  StepParser(std::string_view text, std::size_t line)
      : text_(text), line_(line) {}

  std::string word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t number() {
    std::string w = word();
    if (w.empty() || w.find_first_not_of("0123456789") != std::string::npos) {
      fail("expected a step number, got '" + w + "'");
    }
    return std::stoul(w);
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  // key=<term>; returns false at end of line.
  bool binding(std::string& key, std::optional<Term>& value) {
    if (at_end()) return false;
    std::size_t eq = text_.find('=', pos_);
    if (eq == std::string_view::npos) fail("expected key=term");
    key = std::string(trim(text_.substr(pos_, eq - pos_)));
    pos_ = eq + 1;
    try {
      value = parse_term_prefix(text_, pos_);
    } catch (const ParseError& e) {
      fail("binding " + key + ": " + e.detail());
    }
    return true;
  }

  void expect_end() {
    if (!at_end()) fail("unexpected '" + std::string(text_.substr(pos_)) + "'");
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ScriptSyntaxError(line_, message);
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

ProofStep parse_step(std::string_view body, std::size_t line) {
  StepParser p(body, line);
  const std::string op = p.word();
  if (op == "conj") {
    ConjStep step{p.number(), p.number()};
    p.expect_end();
    return step;
  }
  if (op == "mp") {
    MpStep step{p.number(), p.number()};
    p.expect_end();
    return step;
  }
  if (op == "release") {
    ReleaseStep step{p.number()};
    p.expect_end();
    return step;
  }
  if (op == "lax") {
    std::string name = p.word();
    auto axiom = parse_hilbert_axiom(name);
    if (!axiom) p.fail("unknown logical axiom '" + name + "'");
    std::optional<Term> slots[3];
    std::string key;
    std::optional<Term> value;
    while (p.binding(key, value)) {
      int i = key == "s" ? 0 : key == "t" ? 1 : key == "u" ? 2 : -1;
      if (i < 0) p.fail("unknown binding '" + key + "'");
      if (slots[i]) p.fail("duplicate binding '" + key + "'");
      slots[i] = value;
    }
    LogicalAxiomStep step{*axiom, {}};
    const std::size_t arity = axiom_arity(*axiom);
    for (std::size_t i = 0; i < 3; ++i) {
      if (i < arity && !slots[i]) {
        p.fail(name + " needs binding " + std::string(1, "stu"[i]));
      }
      if (i >= arity && slots[i]) {
        p.fail(name + " takes no binding " + std::string(1, "stu"[i]));
      }
      if (slots[i]) step.terms.push_back(*slots[i]);
    }
    return step;
  }
  if (op == "nlax") {
    std::string id = p.word();
    if (id.size() != 1 || id[0] < '1' || id[0] > '9') {
      p.fail("unknown nonlogical scheme '" + id + "'");
    }
    NonlogicalAxiomStep step{id[0] - '0', {}};
    std::string key;
    std::optional<Term> value;
    while (p.binding(key, value)) {
      std::optional<Term>* slot = key == "s"                     ? &step.bindings.s
                                  : key == "t"                   ? &step.bindings.t
                                  : key == "t'" || key == "t2"   ? &step.bindings.t_prime
                                                                 : nullptr;
      if (!slot) p.fail("unknown binding '" + key + "'");
      if (*slot) p.fail("duplicate binding '" + key + "'");
      *slot = value;
    }
    return step;
  }
  p.fail("unknown rule '" + op + "'");
}

}  // namespace

ProofScript parse_script(std::string_view text) {
  ProofScript script;
  std::optional<std::pair<std::size_t, std::string>> claim_text;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_number = 0;
  while (std::getline(in, raw)) {
    ++line_number;
    std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string_view body = trim(line.substr(1));
      if (body.rfind("name:", 0) == 0) {
        script.name = std::string(trim(body.substr(5)));
      } else if (body.rfind("description:", 0) == 0) {
        script.description = std::string(trim(body.substr(12)));
      } else if (body.rfind("claim:", 0) == 0) {
        claim_text.emplace(line_number, std::string(trim(body.substr(6))));
      } else {
        script.comments[script.steps.size() + 1].emplace_back(body);
      }
      continue;
    }
    std::size_t dot = line.find('.');
    const std::size_t expected = script.steps.size() + 1;
    std::string_view label = trim(line.substr(0, dot));
    if (dot == std::string_view::npos || label.empty() ||
        label.find_first_not_of("0123456789") != std::string_view::npos ||
        std::stoul(std::string(label)) != expected) {
      throw ScriptSyntaxError(line_number,
                              "expected step " + std::to_string(expected));
    }
    script.steps.push_back(parse_step(line.substr(dot + 1), line_number));
  }
  if (claim_text) {
    try {
      script.claim = parse_sentence(claim_text->second);
    } catch (const ParseError& e) {
      throw ScriptSyntaxError(claim_text->first, "claim: " + e.detail());
    }
  }
  return script;
}

ProofScript load_script(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open script '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_script(buffer.str());
}

std::string to_text(const ProofStep& step) {
  std::ostringstream os;
  if (const auto* lax = std::get_if<LogicalAxiomStep>(&step)) {
    os << "lax " << to_string(lax->axiom);
    for (std::size_t i = 0; i < lax->terms.size(); ++i) {
      os << ' ' << "stu"[i] << '=' << lax->terms[i];
    }
  } else if (const auto* nlax = std::get_if<NonlogicalAxiomStep>(&step)) {
    os << "nlax " << nlax->scheme;
    if (nlax->bindings.s) os << " s=" << *nlax->bindings.s;
    if (nlax->bindings.t) os << " t=" << *nlax->bindings.t;
    if (nlax->bindings.t_prime) os << " t'=" << *nlax->bindings.t_prime;
  } else if (const auto* conj = std::get_if<ConjStep>(&step)) {
    os << "conj " << conj->left << ' ' << conj->right;
  } else if (const auto* mp = std::get_if<MpStep>(&step)) {
    os << "mp " << mp->minor << ' ' << mp->major;
  } else {
    os << "release " << std::get<ReleaseStep>(step).premise;
  }
  return os.str();
}

std::string to_text(const ProofScript& script) {
  std::ostringstream os;
  if (!script.name.empty()) os << "# name: " << script.name << '\n';
  if (!script.description.empty()) {
    os << "# description: " << script.description << '\n';
  }
  if (script.claim) os << "# claim: " << *script.claim << '\n';
  auto emit_comments = [&](std::size_t before) {
    if (auto it = script.comments.find(before); it != script.comments.end()) {
      for (const auto& c : it->second) os << "# " << c << '\n';
    }
  };
  for (std::size_t i = 0; i < script.steps.size(); ++i) {
    emit_comments(i + 1);
    os << i + 1 << ". " << to_text(script.steps[i]) << '\n';
  }
  emit_comments(script.steps.size() + 1);
  return os.str();
}

}  // namespace atm
