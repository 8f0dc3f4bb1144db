#include "hyperring/cli/definition.hpp"

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace hyperring::cli {

namespace {

struct Token {
    std::string text;
    std::size_t line;
    std::size_t column;  // 1-based
};

auto is_space(char c) -> bool { return c == ' ' || c == '\t' || c == '\r'; }

// Position of the first `c` at bracket depth 0 at or after `from`.
auto find_top(std::string_view s, char c, std::size_t from = 0) -> std::optional<std::size_t> {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char x = s[i];
        if (x == '(' || x == '[') ++depth;
        else if (x == ')' || x == ']') --depth;
        else if (depth == 0 && x == c && i >= from) return i;
    }
    return std::nullopt;
}

auto split_top(std::string_view s, char sep) -> std::vector<std::pair<std::string, std::size_t>> {
    std::vector<std::pair<std::string, std::size_t>> out;
    std::size_t start = 0;
    while (true) {
        auto p = find_top(s, sep, start);
        const auto end = p ? *p : s.size();
        out.emplace_back(std::string(s.substr(start, end - start)), start);
        if (!p) break;
        start = *p + 1;
    }
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) { lex(text); }

    auto run() -> RawTables {
        RawTables t;
        read_header(t);
        const auto n = t.names.size();
        std::vector<std::optional<Element>> neg(n);
        std::vector<std::vector<std::optional<Element>>> mul(n, std::vector<std::optional<Element>>(n));
        std::vector<std::vector<std::optional<std::vector<Element>>>> add(
            n, std::vector<std::optional<std::vector<Element>>>(n));

        for (const auto& tok : entries("neg")) read_neg(tok, neg);
        for (const auto& tok : entries("mul")) read_mul(tok, mul);
        for (const auto& tok : entries("add")) read_add(tok, add);

        const auto z = t.zero;
        if (!neg[z]) neg[z] = z;
        for (Element a = 0; a < n; ++a)
            if (neg[a] && !neg[*neg[a]]) neg[*neg[a]] = a;
        for (Element a = 0; a < n; ++a) {
            if (!mul[a][z]) mul[a][z] = mul[z][a] = z;
            if (!add[a][z]) add[a][z] = add[z][a] = std::vector<Element>{a};
        }

        const auto end_line = last_line_ + 1;
        t.neg.resize(n);
        t.mul.assign(n, std::vector<Element>(n));
        t.add.assign(n, std::vector<std::vector<Element>>(n));
        for (Element a = 0; a < n; ++a) {
            if (!neg[a]) throw ParseError(line_of("neg", end_line), 1, "missing neg entry for " + t.names[a]);
            t.neg[a] = *neg[a];
            for (Element b = 0; b < n; ++b) {
                if (!mul[a][b])
                    throw ParseError(line_of("mul", end_line), 1,
                                     "missing mul entry for " + t.names[a] + "*" + t.names[b]);
                if (!add[a][b])
                    throw ParseError(line_of("add", end_line), 1,
                                     "missing add entry for " + t.names[a] + "+" + t.names[b]);
                t.mul[a][b] = *mul[a][b];
                t.add[a][b] = *add[a][b];
            }
        }
        return t;
    }

private:
    struct Line {
        std::string key;
        std::size_t line;
        std::size_t value_column;
        std::string value;
        std::vector<Token> tokens;
    };

    void lex(std::string_view text) {
        std::size_t lineno = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto nl = text.find('\n', pos);
            if (nl == std::string_view::npos) nl = text.size();
            ++lineno;
            std::string_view raw = text.substr(pos, nl - pos);
            pos = nl + 1;
            if (auto h = raw.find('#'); h != std::string_view::npos) raw = raw.substr(0, h);
            std::size_t first = 0;
            while (first < raw.size() && is_space(raw[first])) ++first;
            if (first == raw.size()) continue;
            const auto colon = raw.find(':');
            if (colon == std::string_view::npos) throw ParseError(lineno, first + 1, "expected 'key: value'");
            std::string key(raw.substr(first, colon - first));
            while (!key.empty() && is_space(key.back())) key.pop_back();
            static const std::set<std::string> keys{"name", "elements", "zero", "one", "neg", "mul", "add"};
            if (!keys.contains(key)) throw ParseError(lineno, first + 1, "unknown key '" + key + "'");

            Line l{key, lineno, colon + 2, {}, {}};
            std::string_view rest = raw.substr(colon + 1);
            std::size_t i = 0;
            while (i < rest.size()) {
                while (i < rest.size() && is_space(rest[i])) ++i;
                if (i == rest.size()) break;
                const auto start = i;
                while (i < rest.size() && !is_space(rest[i])) ++i;
                l.tokens.push_back({std::string(rest.substr(start, i - start)), lineno, colon + 2 + start});
            }
            for (const auto& tk : l.tokens) l.value += (l.value.empty() ? "" : " ") + tk.text;
            last_line_ = lineno;
            lines_.push_back(std::move(l));
            if (nl == text.size()) break;
        }
    }

    auto single(const std::string& key) -> const Line* {
        const Line* found = nullptr;
        for (const auto& l : lines_)
            if (l.key == key) {
                if (found) throw ParseError(l.line, 1, "duplicate '" + key + "' line");
                found = &l;
            }
        return found;
    }

    auto entries(const std::string& key) const -> std::vector<Token> {
        std::vector<Token> out;
        for (const auto& l : lines_)
            if (l.key == key) out.insert(out.end(), l.tokens.begin(), l.tokens.end());
        return out;
    }

    auto line_of(const std::string& key, std::size_t fallback) const -> std::size_t {
        std::size_t last = 0;
        for (const auto& l : lines_)
            if (l.key == key) last = l.line;
        return last ? last : fallback;
    }

    void read_header(RawTables& t) {
        const auto* name = single("name");
        const auto* elements = single("elements");
        const auto* zero = single("zero");
        const auto* one = single("one");
        const auto end = last_line_ + 1;
        if (!elements) throw ParseError(end, 1, "missing 'elements' line");
        if (!zero) throw ParseError(end, 1, "missing 'zero' line");
        if (!one) throw ParseError(end, 1, "missing 'one' line");
        t.name = name ? name->value : std::string("unnamed");
        for (const auto& tk : elements->tokens) {
            if (!is_writable_name(tk.text)) throw ParseError(tk.line, tk.column, "bad element name '" + tk.text + "'");
            if (index_.contains(tk.text)) throw ParseError(tk.line, tk.column, "duplicate element '" + tk.text + "'");
            index_[tk.text] = t.names.size();
            t.names.push_back(tk.text);
        }
        if (t.names.empty()) throw ParseError(elements->line, elements->value_column, "no elements");
        t.zero = single_element(*zero);
        t.one = single_element(*one);
    }

    auto single_element(const Line& l) -> Element {
        if (l.tokens.size() != 1) throw ParseError(l.line, l.value_column, "expected one element");
        return element(l.tokens[0].text, l.tokens[0].line, l.tokens[0].column);
    }

    auto element(const std::string& s, std::size_t line, std::size_t column) const -> Element {
        auto it = index_.find(s);
        if (it == index_.end()) throw ParseError(line, column, "unknown element '" + s + "'");
        return it->second;
    }

    // Splits "lhs<op>rhs=value" at depth 0; returns the three pieces with columns.
    auto binary(const Token& tk, char op) const -> std::tuple<Element, Element, std::string, std::size_t> {
        std::string_view s = tk.text;
        auto p = find_top(s, op, 1);
        if (!p) throw ParseError(tk.line, tk.column, std::string("expected '") + op + "' in '" + tk.text + "'");
        auto e = find_top(s, '=', *p + 1);
        if (!e) throw ParseError(tk.line, tk.column, "expected '=' in '" + tk.text + "'");
        const auto a = element(std::string(s.substr(0, *p)), tk.line, tk.column);
        const auto b = element(std::string(s.substr(*p + 1, *e - *p - 1)), tk.line, tk.column + *p + 1);
        return {a, b, std::string(s.substr(*e + 1)), tk.column + *e + 1};
    }

    void read_neg(const Token& tk, std::vector<std::optional<Element>>& neg) const {
        auto e = find_top(tk.text, '=', 1);
        if (!e) throw ParseError(tk.line, tk.column, "expected 'a=b' in '" + tk.text + "'");
        const auto a = element(tk.text.substr(0, *e), tk.line, tk.column);
        const auto b = element(tk.text.substr(*e + 1), tk.line, tk.column + *e + 1);
        if (neg[a] && *neg[a] != b) throw ParseError(tk.line, tk.column, "conflicting neg entry for " + tk.text.substr(0, *e));
        neg[a] = b;
    }

    void read_mul(const Token& tk, std::vector<std::vector<std::optional<Element>>>& mul) const {
        auto [a, b, rhs, col] = binary(tk, '*');
        const auto c = element(rhs, tk.line, col);
        for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
            if (mul[x][y] && *mul[x][y] != c)
                throw ParseError(tk.line, tk.column, "conflicting mul entries for " + tk.text.substr(0, tk.text.find('=')));
            mul[x][y] = c;
        }
    }

    void read_add(const Token& tk, std::vector<std::vector<std::optional<std::vector<Element>>>>& add) const {
        auto [a, b, rhs, col] = binary(tk, '+');
        if (rhs.size() < 2 || rhs.front() != '{' || rhs.back() != '}')
            throw ParseError(tk.line, col, "expected a set '{...}'");
        std::set<Element> members;
        const auto inner = std::string_view(rhs).substr(1, rhs.size() - 2);
        if (!inner.empty())
            for (const auto& [name, off] : split_top(inner, ','))
                members.insert(element(name, tk.line, col + 1 + off));
        std::vector<Element> set(members.begin(), members.end());
        for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
            if (add[x][y] && *add[x][y] != set)
                throw ParseError(tk.line, tk.column, "conflicting add entries for " + tk.text.substr(0, tk.text.find('=')));
            add[x][y] = set;
        }
    }

    std::vector<Line> lines_;
    std::size_t last_line_ = 0;
    std::map<std::string, Element> index_;
};

}  // namespace

auto is_writable_name(std::string_view name) -> bool {
    if (name.empty()) return false;
    int depth = 0;
    for (char c : name) {
        if (is_space(c) || c == '\n' || c == '#' || c == ':' || c == '{' || c == '}' || c == '=') return false;
        if (c == '(' || c == '[') ++depth;
        else if (c == ')' || c == ']') {
            if (--depth < 0) return false;
        } else if (depth == 0 && (c == '*' || c == '+' || c == ',')) return false;
    }
    return depth == 0;
}

auto parse_tables(std::string_view text) -> RawTables { return Parser(text).run(); }

auto parse_definition(std::string_view text) -> MultiringPtr { return Multiring::create(parse_tables(text)); }

auto emit_definition(const Multiring& A) -> std::string {
    for (const auto& s : A.element_names())
        if (!is_writable_name(s)) throw PreconditionFailed("element name '" + s + "' cannot be written");
    std::ostringstream o;
    const auto& nm = A.element_names();
    o << "name: " << A.name() << "\n";
    o << "elements:";
    for (const auto& s : nm) o << ' ' << s;
    o << "\nzero: " << nm[A.zero()] << "\none: " << nm[A.one()] << "\nneg:";
    for (Element a = 0; a < A.size(); ++a) o << ' ' << nm[a] << '=' << nm[A.neg(a)];
    o << '\n';
    for (Element a = 0; a < A.size(); ++a) {
        if (a == A.zero()) continue;
        std::ostringstream row;
        for (Element b = a; b < A.size(); ++b)
            if (b != A.zero()) row << ' ' << nm[a] << '*' << nm[b] << '=' << nm[A.mul(a, b)];
        if (!row.str().empty()) o << "mul:" << row.str() << '\n';
    }
    for (Element a = 0; a < A.size(); ++a) {
        if (a == A.zero()) continue;
        std::ostringstream row;
        for (Element b = a; b < A.size(); ++b) {
            if (b == A.zero()) continue;
            row << ' ' << nm[a] << '+' << nm[b] << "={";
            bool first = true;
            A.add(a, b).for_each([&](Element c) {
                row << (first ? "" : ",") << nm[c];
                first = false;
            });
            row << '}';
        }
        if (!row.str().empty()) o << "add:" << row.str() << '\n';
    }
    return o.str();
}

}  // namespace hyperring::cli
