#include "reflex/presentation.hpp"

#include <algorithm>
#include <sstream>

namespace reflex {

namespace {

std::vector<int> free_reduce(std::vector<int> w) {
    std::vector<int> out;
    for (int x : w) {
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
    Presentation p;
    p.origin = text;
    std::map<std::string, WordExpr::Ptr> abbrev;
    std::map<std::string, int> genidx;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    auto add_relator = [&](const WordExpr::Ptr& w) {
        p.relators.push_back(w);
        auto letters = free_reduce(w->letters(genidx));
        p.relator_letters.push_back(std::move(letters));
    };
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto fail = [&](const std::string& m) {
            throw ParseError("line " + std::to_string(lineno) + ": " + m + " [" + line + "]");
        };
        if (line.rfind("gens:", 0) == 0) {
            for (const auto& g : split_ws(line.substr(5))) {
                if (genidx.count(g)) fail("duplicate generator " + g);
                genidx[g] = (int)p.gens.size();
                p.gens.push_back(g);
            }
            if (p.gens.empty()) fail("no generators");
            continue;
        }
        if (p.gens.empty()) fail("gens: line must come first");
        if (line.rfind("let ", 0) == 0) {
            auto eq = line.find('=');
            if (eq == std::string::npos) fail("let needs '='");
            std::string name = trim(line.substr(4, eq - 4));
            if (name.empty() || genidx.count(name) || abbrev.count(name))
                fail("bad abbreviation name");
            WordExpr::Ptr w;
            try {
                w = parse_word(line.substr(eq + 1), abbrev);
            } catch (const WordError& e) {
                fail(e.what());
            }
            // every symbol must be known
            w->letters(genidx);
            abbrev[name] = w;
            continue;
        }
        if (line.rfind("coxeter:", 0) == 0) {
            std::string rest = trim(line.substr(8));
            int a, b, c;
            if (sscanf(rest.c_str(), "w(%d,%d,%d)", &a, &b, &c) != 3 || a < 2 || b < 2 || c < 2)
                fail("expected w(p,q,r)");
            if (p.gens.size() != 3) fail("coxeter: needs exactly 3 generators");
            auto g1 = WordExpr::sym(p.gens[0]), g2 = WordExpr::sym(p.gens[1]),
                 g3 = WordExpr::sym(p.gens[2]);
            add_relator(WordExpr::pow(g1, 2));
            add_relator(WordExpr::pow(g2, 2));
            add_relator(WordExpr::pow(g3, 2));
            add_relator(WordExpr::pow(WordExpr::prod({g1, g2}), a));
            add_relator(WordExpr::pow(WordExpr::prod({g1, g3}), b));
            add_relator(WordExpr::pow(WordExpr::prod({g2, g3}), c));
            continue;
        }
        // relator line: chain of equalities
        std::vector<std::string> sides;
        size_t start = 0;
        while (true) {
            auto eq = line.find('=', start);
            if (eq == std::string::npos) {
                sides.push_back(trim(line.substr(start)));
                break;
            }
            sides.push_back(trim(line.substr(start, eq - start)));
            start = eq + 1;
        }
        std::vector<WordExpr::Ptr> ws;
        for (const auto& side : sides) {
            if (side == "1") {
                ws.push_back(nullptr);  // identity marker
                continue;
            }
            try {
                ws.push_back(parse_word(side, abbrev));
            } catch (const WordError& e) {
                fail(e.what());
            }
            ws.back()->letters(genidx);  // validates symbols
        }
        if (ws.size() == 1) {
            if (!ws[0]) fail("bare relator '1' is trivial");
            add_relator(ws[0]);
        } else {
            // x = y = z gives x y^-1 and y z^-1
            for (size_t i = 0; i + 1 < ws.size(); ++i) {
                if (!ws[i] && !ws[i + 1]) fail("1 = 1 is trivial");
                if (!ws[i])
                    add_relator(ws[i + 1]);
                else if (!ws[i + 1])
                    add_relator(ws[i]);
                else
                    add_relator(WordExpr::prod({ws[i], WordExpr::pow(ws[i + 1], -1)}));
            }
        }
    }
    if (p.gens.empty()) throw ParseError("presentation has no gens: line");
    if (p.relators.empty()) throw ParseError("presentation has no relators");
    return p;
}

std::string Presentation::print() const {
    std::ostringstream os;
    os << "gens:";
    for (const auto& g : gens) os << " " << g;
    os << "\n";
    for (const auto& r : relators) os << r->str() << "\n";
    return os.str();
}

// ----------------------------------------------------------------- Todd-Coxeter

namespace {

// coset table with union-find coincidence handling
struct TCTable {
    int ncols;                           // 2 * #gens: g, g^-1 alternating
    std::vector<std::vector<long>> tab;  // [coset][col], 0 = undefined, cosets 1-based
    std::vector<long> rep;               // union-find
    long defined = 0;

    explicit TCTable(int gens) : ncols(2 * gens) {
        tab.push_back(std::vector<long>(ncols, 0));  // dummy index 0
        rep.push_back(0);
        new_coset();  // coset 1
    }

    long new_coset() {
        tab.push_back(std::vector<long>(ncols, 0));
        rep.push_back((long)rep.size());
        ++defined;
        return (long)rep.size() - 1;
    }

    long find(long c) {
        while (rep[c] != c) {
            rep[c] = rep[rep[c]];
            c = rep[c];
        }
        return c;
    }

    static int col(int letter) {  // signed letter -> column
        return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
    }
    static int invcol(int c) { return c ^ 1; }

    long get(long coset, int column) {
        long t = tab[coset][column];
        if (t == 0) return 0;
        t = find(t);
        tab[coset][column] = t;
        return t;
    }

    std::vector<std::pair<long, long>> pending;

    void set(long a, int column, long b) {
        a = find(a);
        b = find(b);
        long cur = get(a, column);
        if (cur == b) return;
        if (cur != 0) {
            pending.push_back({cur, b});
            return;
        }
        tab[a][column] = b;
        long back = get(b, invcol(column));
        if (back == 0)
            tab[b][invcol(column)] = a;
        else if (back != a)
            pending.push_back({back, a});
    }

    void merge(long a, long b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        rep[b] = a;
        // fold b's row into a's
        for (int c = 0; c < ncols; ++c) {
            long t = tab[b][c];
            if (t == 0) continue;
            tab[b][c] = 0;
            set(a, c, find(t));
        }
    }

    void process_pending() {
        while (!pending.empty()) {
            auto [a, b] = pending.back();
            pending.pop_back();
            merge(a, b);
        }
    }

    long live_count() {
        long n = 0;
        for (long c = 1; c < (long)rep.size(); ++c)
            if (find(c) == c) ++n;
        return n;
    }
};

}  // namespace

TCResult todd_coxeter(const Presentation& p, long cap, TCStrategy strategy) {
    TCTable T((int)p.gens.size());
    TCResult res;

    // scan relator r at coset c; fills a single gap as a deduction and queues a
    // coincidence when the scans disagree. Returns true if the table changed.
    auto scan = [&](long c, const std::vector<int>& r) -> bool {
        c = T.find(c);
        long f = c;
        size_t fi = 0;
        while (fi < r.size()) {
            long nxt = T.get(f, TCTable::col(r[fi]));
            if (nxt == 0) break;
            f = nxt;
            ++fi;
        }
        if (fi == r.size()) {
            if (f != c) {
                T.pending.push_back({f, c});
                return true;
            }
            return false;
        }
        long b = c;
        size_t bi = r.size();
        while (bi > fi + 1) {
            long nxt = T.get(b, TCTable::invcol(TCTable::col(r[bi - 1])));
            if (nxt == 0) break;
            b = nxt;
            --bi;
        }
        if (bi == fi + 1) {  // single gap: deduction (set also detects coincidences)
            T.set(f, TCTable::col(r[fi]), b);
            return true;
        }
        return false;
    };

    while (true) {
        // deduction passes until quiescent
        bool changed = true;
        while (changed) {
            changed = false;
            for (long c = 1; c < (long)T.rep.size(); ++c) {
                if (T.find(c) != c) continue;
                for (const auto& r : p.relator_letters) {
                    if (r.empty()) continue;
                    if (scan(c, r)) changed = true;
                    T.process_pending();
                }
            }
        }
        // table complete?
        long firstc = 0;
        int firstcol = -1;
        for (long c = 1; c < (long)T.rep.size() && firstcol < 0; ++c) {
            if (T.find(c) != c) continue;
            for (int col = 0; col < T.ncols; ++col)
                if (T.get(c, col) == 0) {
                    firstc = c;
                    firstcol = col;
                    break;
                }
        }
        if (firstcol < 0) {
            res.completed = true;
            res.order = T.live_count();
            res.cosets_used = T.defined;
            return res;
        }
        if (T.defined >= cap) {
            res.completed = false;
            res.cosets_used = T.defined;
            return res;
        }
        if (strategy == TCStrategy::TableScan) {
            long nc = T.new_coset();
            T.set(firstc, firstcol, nc);
            T.process_pending();
        } else {
            // RelatorScan: fully close the first gapped relator scan
            bool done = false;
            for (long c = 1; c < (long)T.rep.size() && !done; ++c) {
                if (T.find(c) != c) continue;
                for (const auto& r : p.relator_letters) {
                    long f = T.find(c);
                    bool gapped = false;
                    for (size_t fi = 0; fi < r.size(); ++fi) {
                        long nxt = T.get(f, TCTable::col(r[fi]));
                        if (nxt == 0) {
                            gapped = true;
                            if (T.defined >= cap) {
                                res.completed = false;
                                res.cosets_used = T.defined;
                                return res;
                            }
                            long nc = T.new_coset();
                            T.set(f, TCTable::col(r[fi]), nc);
                            T.process_pending();
                            f = T.find(f);
                            nxt = T.get(f, TCTable::col(r[fi]));
                            if (nxt == 0) break;  // the new coset got merged away
                        }
                        f = nxt;
                    }
                    if (gapped) {
                        done = true;
                        break;
                    }
                }
            }
            if (!done) {  // all relator scans closed but the table is incomplete
                long nc = T.new_coset();
                T.set(firstc, firstcol, nc);
                T.process_pending();
            }
        }
    }
}

bool relations_hold(const ReflectionRep& rep, const Presentation& p, std::string& first_failure) {
    if (p.gens.size() != 3) throw ParseError("relations_hold: need 3 generators");
    std::map<std::string, Mat> env = {
        {p.gens[0], rep.s[0]}, {p.gens[1], rep.s[1]}, {p.gens[2], rep.s[2]}};
    for (const auto& r : p.relators) {
        if (!r->eval(env).is_identity()) {
            first_failure = r->str();
            return false;
        }
    }
    first_failure.clear();
    return true;
}

bool relations_hold(const ReflectionRep& rep, const Presentation& p) {
    std::string dummy;
    return relations_hold(rep, p, dummy);
}

}  // namespace reflex
