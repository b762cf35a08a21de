#ifndef LOGDER_MPOLY_HPP
#define LOGDER_MPOLY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "logder/errors.hpp"
#include "logder/ratfunc.hpp"

namespace logder {

// Exponent vector over a fixed variable universe y_1..y_nvars.
struct Monomial {
    std::vector<std::uint16_t> e;

    static Monomial unit(int nvars) {
        Monomial m;
        m.e.assign(static_cast<std::size_t>(nvars), 0);
        return m;
    }
    int nvars() const { return static_cast<int>(e.size()); }
    bool is_unit() const {
        return std::all_of(e.begin(), e.end(), [](std::uint16_t v) { return v == 0; });
    }
    long total_degree() const {
        long d = 0;
        for (std::uint16_t v : e) d += v;
        return d;
    }
    int exponent(int var) const { return e[static_cast<std::size_t>(var - 1)]; }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = static_cast<std::uint16_t>(r.e[i] + o.e[i]);
        return r;
    }
    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    // o / *this, assuming divisibility
    Monomial divide_into(const Monomial& o) const {
        Monomial r = o;
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = static_cast<std::uint16_t>(o.e[i] - e[i]);
        return r;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
        return r;
    }
    bool coprime(const Monomial& o) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0 && o.e[i] > 0) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
    // structural key order for term maps; display order is a TermOrder concern
    bool operator<(const Monomial& o) const { return e < o.e; }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!out.empty()) out += "*";
            out += "y" + std::to_string(i + 1);
            if (e[i] > 1) out += "^" + std::to_string(e[i]);
        }
        return out.empty() ? "1" : out;
    }
};

// w(y_i) = i by default; custom positive weights allowed.
struct WeightGrading {
    std::vector<unsigned> weights;  // empty: w_i = i

    unsigned of(int var) const {
        if (weights.empty()) return static_cast<unsigned>(var);
        unsigned w = weights[static_cast<std::size_t>(var - 1)];
        if (w < 1) throw DomainError("grading weights must be positive");
        return w;
    }
    long weight(const Monomial& m) const {
        long w = 0;
        for (int i = 1; i <= m.nvars(); ++i)
            w += static_cast<long>(m.exponent(i)) * of(i);
        return w;
    }
};

// Total order on monomials; grevlex (default) or lex, with an optional
// significance permutation (perm[0] = least significant variable, 1-based).
// Without a permutation, y_1 < y_2 < ... in significance.
struct TermOrder {
    enum class Kind { grevlex, lex };
    Kind kind = Kind::grevlex;
    std::vector<int> perm;

    int rank_var(int significance_pos, int nvars) const {
        if (perm.empty()) return significance_pos + 1;
        return perm[static_cast<std::size_t>(significance_pos)];
    }

    // -1 if a < b, 0 if equal, +1 if a > b
    int compare(const Monomial& a, const Monomial& b) const {
        const int n = a.nvars();
        if (kind == Kind::grevlex) {
            long da = a.total_degree(), db = b.total_degree();
            if (da != db) return da < db ? -1 : 1;
            for (int pos = 0; pos < n; ++pos) {
                int v = rank_var(pos, n);
                int ea = a.exponent(v), eb = b.exponent(v);
                if (ea != eb) return ea < eb ? 1 : -1;
            }
            return 0;
        }
        for (int pos = n - 1; pos >= 0; --pos) {
            int v = rank_var(pos, n);
            int ea = a.exponent(v), eb = b.exponent(v);
            if (ea != eb) return ea < eb ? -1 : 1;
        }
        return 0;
    }
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
};

// Sparse multivariate polynomial in y_1..y_nvars over K = RatFunc<F>.
template <class F>
class MPoly {
  public:
    using K = RatFunc<F>;
    using TermMap = std::map<Monomial, K>;

    explicit MPoly(int nvars) : nvars_(nvars) {
        if (nvars < 0) throw DomainError("negative variable count");
    }
    static MPoly constant(int nvars, const K& c) {
        MPoly f(nvars);
        if (!c.is_zero()) f.terms_.emplace(Monomial::unit(nvars), c);
        return f;
    }
    static MPoly variable(int nvars, int j, const K& context) {
        if (j < 1 || j > nvars)
            throw DomainError("variable y" + std::to_string(j) + " outside universe y1..y" +
                              std::to_string(nvars));
        MPoly f(nvars);
        Monomial m = Monomial::unit(nvars);
        m.e[static_cast<std::size_t>(j - 1)] = 1;
        f.terms_.emplace(std::move(m), context.one_like());
        return f;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
    }
    // Constant term; needs a context because the polynomial may have no terms.
    K constant_term(const K& context) const {
        auto it = terms_.find(Monomial::unit(nvars_));
        return it == terms_.end() ? context.zero_like() : it->second;
    }

    void add_term(const Monomial& m, const K& c) {
        if (m.nvars() != nvars_) throw DomainError("monomial universe mismatch");
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MPoly operator-() const {
        MPoly r(nvars_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    MPoly operator+(const MPoly& o) const {
        require_same_universe(o);
        MPoly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    MPoly operator-(const MPoly& o) const {
        require_same_universe(o);
        MPoly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }
    MPoly operator*(const MPoly& o) const {
        require_same_universe(o);
        MPoly r(nvars_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    MPoly scale(const K& s) const {
        MPoly r(nvars_);
        if (s.is_zero()) return r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
        return r;
    }
    // *this * (c * mono)
    MPoly mul_term(const K& c, const Monomial& mono) const {
        MPoly r(nvars_);
        if (c.is_zero()) return r;
        for (const auto& [m, k] : terms_) r.terms_.emplace(m * mono, k * c);
        return r;
    }

    bool operator==(const MPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly extended(int new_nvars) const {
        if (new_nvars < nvars_) throw DomainError("extension must not shrink the universe");
        MPoly r(new_nvars);
        for (const auto& [m, c] : terms_) {
            Monomial mm = m;
            mm.e.resize(static_cast<std::size_t>(new_nvars), 0);
            r.terms_.emplace(std::move(mm), c);
        }
        return r;
    }
    MPoly restricted(int new_nvars) const {
        MPoly r(new_nvars);
        for (const auto& [m, c] : terms_) {
            for (int j = new_nvars + 1; j <= nvars_; ++j)
                if (m.exponent(j) != 0)
                    throw DomainError("restriction drops live variable y" + std::to_string(j));
            Monomial mm = m;
            mm.e.resize(static_cast<std::size_t>(new_nvars));
            r.terms_.emplace(std::move(mm), c);
        }
        return r;
    }

    std::pair<Monomial, K> leading_term(const TermOrder& order) const {
        if (terms_.empty()) throw DomainError("leading term of zero polynomial");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (order.less(best->first, it->first)) best = it;
        return {best->first, best->second};
    }

    long total_degree() const {
        long d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }
    long max_weight(const WeightGrading& g) const {
        long w = 0;
        for (const auto& [m, c] : terms_) w = std::max(w, g.weight(m));
        return w;
    }

    // Sum of the maximal-weight terms under the grading.
    MPoly leading_form(const WeightGrading& g) const {
        if (terms_.empty()) throw DomainError("leading form of zero polynomial");
        long top = max_weight(g);
        MPoly r(nvars_);
        for (const auto& [m, c] : terms_)
            if (g.weight(m) == top) r.terms_.emplace(m, c);
        return r;
    }

    // The derivation with d(y_j) = y_{j+1} - y_1*y_j and d/dx on coefficients;
    // the universe grows by one to hold y_{nvars+1}.
    MPoly delta_derive() const {
        MPoly r(nvars_ + 1);
        for (const auto& [m, c] : terms_) {
            Monomial mm = m;
            mm.e.resize(static_cast<std::size_t>(nvars_ + 1), 0);
            K dc = c.derive();
            if (!dc.is_zero()) r.add_term(mm, dc);
            for (int j = 1; j <= nvars_; ++j) {
                int ej = m.exponent(j);
                if (ej == 0) continue;
                K ce = c * c.make_int(ej);
                Monomial up = mm;  // m * y_{j+1} / y_j
                up.e[static_cast<std::size_t>(j - 1)] -= 1;
                up.e[static_cast<std::size_t>(j)] += 1;
                r.add_term(up, ce);
                Monomial down = mm;  // m * y_1
                down.e[0] += 1;
                r.add_term(down, -ce);
            }
        }
        return r;
    }

    // Substitute g for y_j; g lives in the same universe.
    MPoly substitute(int j, const MPoly& g) const {
        require_same_universe(g);
        if (j < 1 || j > nvars_) throw DomainError("substitution variable outside universe");
        int top = 0;
        for (const auto& [m, c] : terms_) top = std::max(top, m.exponent(j));
        std::vector<MPoly> powers;  // powers[e] = g^e for e >= 1; index 0 unused
        powers.reserve(static_cast<std::size_t>(top) + 1);
        for (int e = 0; e <= top; ++e) {
            if (e <= 1)
                powers.push_back(e == 0 ? MPoly(nvars_) : g);
            else
                powers.push_back(powers.back() * g);
        }
        MPoly r(nvars_);
        for (const auto& [m, c] : terms_) {
            int e = m.exponent(j);
            Monomial rest = m;
            rest.e[static_cast<std::size_t>(j - 1)] = 0;
            if (e == 0) {
                r.add_term(rest, c);
            } else {
                for (const auto& [gm, gc] : powers[static_cast<std::size_t>(e)].terms())
                    r.add_term(rest * gm, c * gc);
            }
        }
        return r;
    }

    // y_j -> 0 for all j >= n (the truncation homomorphism).
    MPoly truncate_vars(int n) const {
        MPoly r(nvars_);
        for (const auto& [m, c] : terms_) {
            bool kill = false;
            for (int j = n; j <= nvars_ && !kill; ++j) kill = m.exponent(j) != 0;
            if (!kill) r.terms_.emplace(m, c);
        }
        return r;
    }

    std::string str(const TermOrder& order = TermOrder{}) const {
        if (terms_.empty()) return "0";
        std::vector<const typename TermMap::value_type*> sorted;
        sorted.reserve(terms_.size());
        for (const auto& t : terms_) sorted.push_back(&t);
        std::sort(sorted.begin(), sorted.end(),
                  [&](const auto* a, const auto* b) { return order.less(b->first, a->first); });
        std::string out;
        bool first = true;
        for (const auto* t : sorted) {
            CoeffRepr repr = coeff_repr(t->second);
            if (first) {
                if (repr.negative) out += "-";
                first = false;
            } else {
                out += repr.negative ? " - " : " + ";
            }
            if (t->first.is_unit()) {
                out += repr.body;
            } else {
                if (!repr.is_unit) out += repr.body + "*";
                out += t->first.str();
            }
        }
        return out;
    }

  private:
    void require_same_universe(const MPoly& o) const {
        if (nvars_ != o.nvars_) throw DomainError("variable universe mismatch");
    }

    int nvars_;
    TermMap terms_;
};

}  // namespace logder

#endif
