#include "smasp/format.hpp"

#include "smasp/translate.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

namespace smasp {

namespace {

bool ident_start(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return ident_start(c) || c == '\''; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        auto nl = text.find('\n');
        lines.push_back(text.substr(0, nl));
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
    return lines;
}

[[noreturn]] void fail_at(std::size_t line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

// --- lp ---------------------------------------------------------------------

enum class Tok { ident, if_, comma, dot, lbrace, rbrace, not_, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
};

std::vector<Token> lex_lp(std::string_view text, std::size_t first_line) {
    std::vector<Token> out;
    std::size_t line = first_line;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            ++line;
            ++i;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '%') {
            while (i < text.size() && text[i] != '\n') ++i;
        } else if (c == ':' && i + 1 < text.size() && text[i + 1] == '-') {
            out.push_back({Tok::if_, ":-", line});
            i += 2;
        } else if (c == ',' || c == '.' || c == '{' || c == '}') {
            Tok k = c == ',' ? Tok::comma : c == '.' ? Tok::dot : c == '{' ? Tok::lbrace : Tok::rbrace;
            out.push_back({k, std::string(1, c), line});
            ++i;
        } else if (ident_start(c)) {
            std::size_t j = i;
            while (j < text.size() && ident_char(text[j])) ++j;
            std::string word(text.substr(i, j - i));
            out.push_back({word == "not" ? Tok::not_ : Tok::ident, word, line});
            i = j;
        } else {
            fail_at(line, std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Tok::end, "", line});
    return out;
}

class LpParser {
public:
    explicit LpParser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Program program() {
        Program out;
        while (peek().kind != Tok::end) {
            out.rules.push_back(rule());
        }
        return out;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }
    const Token& expect(Tok k, const char* what) {
        if (peek().kind != k) {
            fail_at(peek().line, std::string("expected ") + what + ", found '" + peek().text + "'");
        }
        return next();
    }

    Rule rule() {
        std::size_t line = peek().line;
        std::optional<Atom> head;
        bool choice = false;
        if (peek().kind == Tok::ident) {
            head = Atom(next().text);
        } else if (peek().kind == Tok::lbrace) {
            next();
            head = Atom(expect(Tok::ident, "atom").text);
            expect(Tok::rbrace, "'}'");
            choice = true;
        }
        Body body;
        if (peek().kind == Tok::if_) {
            next();
            do {
                item(body);
            } while (peek().kind == Tok::comma && (next(), true));
        } else if (!head) {
            fail_at(line, "expected a rule, found '" + peek().text + "'");
        }
        expect(Tok::dot, "'.'");
        if (!head && body.empty()) {
            fail_at(line, "constraint with an empty body");
        }
        if (choice) {
            return desugar_choice(ChoiceRule{*head, std::move(body)});
        }
        return Rule(std::move(head), std::move(body));
    }

    void item(Body& body) {
        int nots = 0;
        while (peek().kind == Tok::not_) {
            next();
            ++nots;
        }
        if (nots > 2) {
            fail_at(peek().line, "at most two negations may precede an atom");
        }
        Atom a(expect(Tok::ident, "atom").text);
        (nots == 0 ? body.pos : nots == 1 ? body.neg : body.negneg).insert(std::move(a));
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

Program parse_lp_at(std::string_view text, std::size_t first_line) {
    return LpParser(lex_lp(text, first_line)).program();
}

// --- clause lines -------------------------------------------------------------

bool valid_identifier(std::string_view s) {
    return !s.empty() && ident_start(s.front()) && std::all_of(s.begin(), s.end(), ident_char) && s != "not";
}

Clause parse_clause_line(std::string_view line, std::size_t number) {
    std::vector<Literal> lits;
    std::size_t start = 0;
    for (;;) {
        auto bar = line.find('|', start);
        auto part = trim(line.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start));
        bool negative = !part.empty() && part.front() == '-';
        auto name = trim(negative ? part.substr(1) : part);
        if (!valid_identifier(name)) {
            fail_at(number, "bad literal '" + std::string(part) + "'");
        }
        lits.push_back(Literal{Atom(std::string(name)), !negative});
        if (bar == std::string_view::npos) break;
        start = bar + 1;
    }
    return Clause(std::move(lits));
}

ClauseSet parse_clause_lines_at(const std::vector<std::string_view>& lines, std::size_t from, std::size_t to) {
    ClauseSet out;
    for (std::size_t i = from; i < to; ++i) {
        auto line = lines[i];
        if (auto pct = line.find('%'); pct != std::string_view::npos) line = line.substr(0, pct);
        line = trim(line);
        if (!line.empty()) {
            out.insert(parse_clause_line(line, i + 1));
        }
    }
    return out;
}

std::pair<ClauseSet, Program> parse_sections(std::string_view text) {
    auto lines = split_lines(text);
    std::optional<std::size_t> theory, program;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto t = trim(lines[i]);
        if (t == "#theory" && !theory) {
            if (program) fail_at(i + 1, "#theory must precede #program");
            theory = i;
        } else if (t == "#program" && !program) {
            if (!theory) fail_at(i + 1, "#program before #theory");
            program = i;
        } else if (!theory) {
            auto content = trim(t.substr(0, t.find('%')));
            if (!content.empty()) fail_at(i + 1, "expected #theory");
        }
    }
    if (!theory) throw ParseError("missing #theory section");
    if (!program) throw ParseError("missing #program section");
    auto f = parse_clause_lines_at(lines, *theory + 1, *program);
    // Re-join the program lines so the lp lexer sees the original layout.
    std::string rest;
    for (std::size_t i = *program + 1; i < lines.size(); ++i) {
        rest += lines[i];
        rest += '\n';
    }
    return {std::move(f), parse_lp_at(rest, *program + 2)};
}

std::string body_text(const Body& b) {
    std::vector<std::string> items;
    for (const auto& a : b.pos) items.push_back(a.name());
    for (const auto& a : b.neg) items.push_back("not " + a.name());
    for (const auto& a : b.negneg) items.push_back("not not " + a.name());
    std::string out;
    for (const auto& s : items) {
        if (!out.empty()) out += ", ";
        out += s;
    }
    return out;
}

std::optional<std::size_t> dimacs_index(const Atom& a) {
    const auto& n = a.name();
    if (a.fresh() || n.size() < 2 || n[0] != 'x' || n[1] == '0') return std::nullopt;
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(n.data() + 1, n.data() + n.size(), v);
    if (ec != std::errc{} || p != n.data() + n.size() || v == 0) return std::nullopt;
    return v;
}

} // namespace

std::string_view format_name(InputFormat f) {
    switch (f) {
    case InputFormat::cnf:
        return "cnf";
    case InputFormat::lp:
        return "lp";
    case InputFormat::pcid:
        return "pcid";
    }
    return "?";
}

InputFormat parse_format(std::string_view name) {
    for (auto f : {InputFormat::cnf, InputFormat::lp, InputFormat::pcid}) {
        if (format_name(f) == name) return f;
    }
    throw PreconditionError("unknown input format '" + std::string(name) + "'");
}

InputFormat guess_format(std::string_view path) {
    auto dot = path.rfind('.');
    auto ext = dot == std::string_view::npos ? std::string_view{} : path.substr(dot + 1);
    if (ext == "cnf" || ext == "dimacs") return InputFormat::cnf;
    if (ext == "pcid") return InputFormat::pcid;
    return InputFormat::lp;
}

DimacsCnf parse_dimacs(std::string_view text) {
    DimacsCnf out;
    std::optional<std::size_t> expected;
    std::vector<Literal> current;
    std::size_t count = 0;
    auto lines = split_lines(text);
    std::size_t last_line = 0;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto line = trim(lines[i]);
        if (line.empty() || line.front() == 'c') continue;
        last_line = i + 1;
        std::istringstream in{std::string(line)};
        if (line.front() == 'p') {
            std::string p, cnf, extra;
            long long v = -1, c = -1;
            in >> p >> cnf >> v >> c;
            if (expected || p != "p" || cnf != "cnf" || in.fail() || v < 0 || c < 0 || (in >> extra)) {
                fail_at(i + 1, "malformed header, expected 'p cnf V C'");
            }
            out.variables = static_cast<std::size_t>(v);
            expected = static_cast<std::size_t>(c);
            continue;
        }
        if (line.front() == '%') break; // SATLIB trailer
        if (!expected) fail_at(i + 1, "clause before the 'p cnf' header");
        std::string tok;
        while (in >> tok) {
            long long x = 0;
            auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
            if (ec != std::errc{} || p != tok.data() + tok.size()) fail_at(i + 1, "bad literal '" + tok + "'");
            if (x == 0) {
                if (current.empty()) fail_at(i + 1, "empty clause");
                out.clauses.insert(Clause(std::move(current)));
                current.clear();
                ++count;
                continue;
            }
            auto idx = static_cast<std::size_t>(x < 0 ? -x : x);
            if (idx > out.variables) fail_at(i + 1, "literal " + tok + " exceeds the declared variable count");
            current.push_back(Literal{Atom("x" + std::to_string(idx)), x > 0});
        }
    }
    if (!expected) throw ParseError("missing 'p cnf' header");
    if (!current.empty()) fail_at(last_line, "last clause is not terminated by 0");
    if (count != *expected) {
        throw ParseError("header declares " + std::to_string(*expected) + " clauses, found " + std::to_string(count));
    }
    return out;
}

std::string print_dimacs(const ClauseSet& f) {
    std::map<Atom, std::size_t> number;
    std::size_t top = 0;
    for (const auto& a : atoms_of(f)) {
        if (auto i = dimacs_index(a)) {
            number[a] = *i;
            top = std::max(top, *i);
        }
    }
    std::string comments;
    for (const auto& a : atoms_of(f)) {
        if (!number.contains(a)) {
            number[a] = ++top;
            comments += "c " + std::to_string(top) + " " + a.name() + "\n";
        }
    }
    std::string out = comments + "p cnf " + std::to_string(top) + " " + std::to_string(f.size()) + "\n";
    for (const auto& c : f) {
        for (const auto& l : c) {
            out += (l.positive ? "" : "-") + std::to_string(number[l.atom]) + " ";
        }
        out += "0\n";
    }
    return out;
}

Program parse_lp(std::string_view text) { return parse_lp_at(text, 1); }

std::string print_rule(const Rule& r) {
    std::string out = r.head() ? r.head()->name() : "";
    if (!r.body().empty()) {
        out += (out.empty() ? ":- " : " :- ") + body_text(r.body());
    }
    return out + ".";
}

std::string print_lp(const Program& pi) {
    std::string out;
    for (const auto& r : pi.rules) {
        out += print_rule(r) + "\n";
    }
    return out;
}

ClauseSet parse_clause_lines(std::string_view text) {
    auto lines = split_lines(text);
    return parse_clause_lines_at(lines, 0, lines.size());
}

std::string print_clause_lines(const ClauseSet& f) {
    std::string out;
    for (const auto& c : f) {
        out += to_string(c) + "\n";
    }
    return out;
}

PcidTheory parse_pcid(std::string_view text) {
    auto [f, pi] = parse_sections(text);
    if (!is_weakly_normal(pi)) {
        throw ParseError("the program section of a pcid theory may not contain constraints");
    }
    return PcidTheory(std::move(f), std::move(pi));
}

SmaspTheory parse_smasp(std::string_view text) {
    auto [f, pi] = parse_sections(text);
    return SmaspTheory{std::move(f), std::move(pi)};
}

std::string print_smasp(const SmaspTheory& t) {
    return "#theory\n" + print_clause_lines(t.f) + "#program\n" + print_lp(t.pi);
}

std::string print_pcid(const PcidTheory& t) { return print_smasp(t.as_smasp()); }

Atom parse_atom(std::string_view text) {
    if (text.starts_with("f(")) {
        return Atom(std::string(text), AtomOrigin::fresh_body);
    }
    if (text.empty()) throw ParseError("empty atom name");
    return Atom(std::string(text));
}

Literal parse_literal(std::string_view text) {
    bool negative = text.starts_with('-');
    return Literal{parse_atom(negative ? text.substr(1) : text), !negative};
}

Problem load_problem(InputFormat format, Mode mode, std::string_view text) {
    Problem p;
    p.format = format;
    p.mode = mode;
    const bool named_bodies = mode == Mode::cmodels || mode == Mode::clasp || mode == Mode::minisatid;
    auto translate = [&](const Program& pi) {
        return SmaspTheory{named_bodies ? ed_completion(pi) : completion(pi), pi};
    };
    switch (format) {
    case InputFormat::cnf:
        p.theory = SmaspTheory{parse_dimacs(text).clauses, {}};
        p.reported = p.theory.atoms();
        break;
    case InputFormat::lp:
        p.program = parse_lp(text);
        p.theory = translate(p.program);
        p.reported = atoms_of(p.program);
        p.positive_only = true;
        break;
    case InputFormat::pcid: {
        p.pcid = parse_pcid(text);
        p.program = p.pcid->pi();
        if (mode == Mode::minisatid) {
            auto pio = open_program(*p.pcid);
            auto f = ed_completion(pio);
            f.insert(p.pcid->f().begin(), p.pcid->f().end());
            p.theory = SmaspTheory{std::move(f), std::move(pio)};
        } else {
            p.theory = translate(pi_translation(*p.pcid));
        }
        p.reported = p.pcid->atoms();
        break;
    }
    }
    return p;
}

LiteralSet project_model(const Problem& p, const LiteralSet& m) {
    LiteralSet out;
    for (const auto& l : m) {
        if (p.reported.contains(l.atom) && (l.positive || !p.positive_only)) {
            out.insert(l);
        }
    }
    return out;
}

std::string format_model(const Problem& p, const LiteralSet& m, bool raw) {
    std::string out;
    for (const auto& l : raw ? m : project_model(p, m)) {
        if (!out.empty()) out += ' ';
        out += to_string(l);
    }
    return out;
}

std::optional<Clause> blocking_clause(const Problem& p, const LiteralSet& m) {
    std::vector<Literal> lits;
    for (const auto& a : p.reported) {
        bool truth = m.contains(pos(a));
        if (p.positive_only || truth || m.contains(neg(a))) {
            lits.push_back(Literal{a, !truth});
        }
    }
    if (lits.empty()) return std::nullopt;
    return Clause(std::move(lits));
}

} // namespace smasp
