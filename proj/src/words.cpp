#include "reflex/words.hpp"

#include <cctype>

namespace reflex {

WordExpr::Ptr WordExpr::sym(std::string name) {
    auto w = std::make_shared<WordExpr>();
    w->kind = Kind::Sym;
    w->name = std::move(name);
    return w;
}
WordExpr::Ptr WordExpr::prod(std::vector<Ptr> parts) {
    if (parts.size() == 1) return parts[0];
    auto w = std::make_shared<WordExpr>();
    w->kind = Kind::Prod;
    w->parts = std::move(parts);
    return w;
}
WordExpr::Ptr WordExpr::pow(Ptr base, long e) {
    auto w = std::make_shared<WordExpr>();
    w->kind = Kind::Pow;
    w->base = std::move(base);
    w->exponent = e;
    return w;
}
WordExpr::Ptr WordExpr::conj(Ptr x, Ptr by) {
    auto w = std::make_shared<WordExpr>();
    w->kind = Kind::Conj;
    w->base = std::move(x);
    w->by = std::move(by);
    return w;
}

std::string WordExpr::str() const {
    switch (kind) {
        case Kind::Sym:
            return name;
        case Kind::Prod: {
            std::string s;
            for (size_t i = 0; i < parts.size(); ++i) {
                if (i) s += " ";
                bool paren = parts[i]->kind == Kind::Prod;
                s += paren ? "(" + parts[i]->str() + ")" : parts[i]->str();
            }
            return s;
        }
        case Kind::Pow: {
            bool paren = base->kind != Kind::Sym;
            std::string b = paren ? "(" + base->str() + ")" : base->str();
            return b + "^" + std::to_string(exponent);
        }
        case Kind::Conj: {
            bool pb = base->kind != Kind::Sym;
            bool py = by->kind != Kind::Sym;
            return (pb ? "(" + base->str() + ")" : base->str()) + "^" +
                   (py ? "(" + by->str() + ")" : by->str());
        }
    }
    return "?";
}

std::vector<int> WordExpr::letters(const std::map<std::string, int>& genidx) const {
    std::vector<int> out;
    auto invert = [](const std::vector<int>& v) {
        std::vector<int> r;
        for (auto it = v.rbegin(); it != v.rend(); ++it) r.push_back(-*it);
        return r;
    };
    switch (kind) {
        case Kind::Sym: {
            auto it = genidx.find(name);
            if (it == genidx.end()) throw WordError("unknown generator " + name);
            out.push_back(it->second + 1);
            break;
        }
        case Kind::Prod:
            for (const auto& p : parts) {
                auto v = p->letters(genidx);
                out.insert(out.end(), v.begin(), v.end());
            }
            break;
        case Kind::Pow: {
            auto v = base->letters(genidx);
            if (exponent < 0) {
                v = invert(v);
            }
            long e = exponent < 0 ? -exponent : exponent;
            for (long i = 0; i < e; ++i) out.insert(out.end(), v.begin(), v.end());
            break;
        }
        case Kind::Conj: {
            auto x = base->letters(genidx), y = by->letters(genidx);
            auto yi = invert(y);
            out.insert(out.end(), yi.begin(), yi.end());
            out.insert(out.end(), x.begin(), x.end());
            out.insert(out.end(), y.begin(), y.end());
            break;
        }
    }
    return out;
}

Mat WordExpr::eval(const std::map<std::string, Mat>& env) const {
    switch (kind) {
        case Kind::Sym: {
            auto it = env.find(name);
            if (it == env.end()) throw WordError("unknown generator " + name);
            return it->second;
        }
        case Kind::Prod: {
            Mat acc = parts[0]->eval(env);
            for (size_t i = 1; i < parts.size(); ++i) acc = acc * parts[i]->eval(env);
            return acc;
        }
        case Kind::Pow:
            return base->eval(env).pow(exponent);
        case Kind::Conj: {
            Mat y = by->eval(env);
            return y.inverse() * base->eval(env) * y;
        }
    }
    throw WordError("bad word node");
}

namespace {

struct WordParser {
    const std::string& s;
    const std::map<std::string, WordExpr::Ptr>& abbrev;
    size_t pos = 0;

    void skip() {
        while (pos < s.size() && isspace((unsigned char)s[pos])) ++pos;
    }
    [[noreturn]] void fail(const std::string& m) {
        throw WordError("word parse error at " + std::to_string(pos) + " in \"" + s + "\": " + m);
    }

    WordExpr::Ptr parse() {
        auto w = word();
        skip();
        if (pos != s.size()) fail("trailing input");
        return w;
    }

    bool at_atom() {
        skip();
        if (pos >= s.size()) return false;
        char c = s[pos];
        return c == '(' || isalpha((unsigned char)c) || c == '_';
    }

    WordExpr::Ptr word() {
        std::vector<WordExpr::Ptr> parts;
        while (at_atom()) parts.push_back(factor());
        if (parts.empty()) fail("expected a word");
        return WordExpr::prod(std::move(parts));
    }

    WordExpr::Ptr factor() {
        auto a = atom();
        skip();
        while (pos < s.size() && s[pos] == '^') {
            ++pos;
            skip();
            if (pos < s.size() && (isdigit((unsigned char)s[pos]) || s[pos] == '-')) {
                bool neg = s[pos] == '-';
                if (neg) ++pos;
                if (pos >= s.size() || !isdigit((unsigned char)s[pos])) fail("expected exponent");
                long e = 0;
                while (pos < s.size() && isdigit((unsigned char)s[pos]))
                    e = e * 10 + (s[pos++] - '0');
                a = WordExpr::pow(a, neg ? -e : e);
            } else {
                a = WordExpr::conj(a, atom());
            }
            skip();
        }
        return a;
    }

    WordExpr::Ptr atom() {
        skip();
        if (pos >= s.size()) fail("expected atom");
        if (s[pos] == '(') {
            ++pos;
            auto w = word();
            skip();
            if (pos >= s.size() || s[pos] != ')') fail("expected )");
            ++pos;
            return w;
        }
        if (isalpha((unsigned char)s[pos]) || s[pos] == '_') {
            std::string name;
            while (pos < s.size() && (isalnum((unsigned char)s[pos]) || s[pos] == '_'))
                name += s[pos++];
            auto it = abbrev.find(name);
            if (it != abbrev.end()) return it->second;
            return WordExpr::sym(name);
        }
        fail("expected atom");
    }
};

}  // namespace

WordExpr::Ptr parse_word(const std::string& text,
                         const std::map<std::string, WordExpr::Ptr>& abbrev) {
    WordParser p{text, abbrev};
    return p.parse();
}

}  // namespace reflex
