#ifndef LOGDER_LOGDIFF_HPP
#define LOGDER_LOGDIFF_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "logder/errors.hpp"
#include "logder/mpoly.hpp"

namespace logder {

inline mpz_class binom(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Monic linear operator D^N + a_{N-1} D^{N-1} + ... + a_1 D + a_0.
template <class F>
struct OdeSpec {
    std::vector<RatFunc<F>> coeffs;  // index i -> a_i

    int order() const { return static_cast<int>(coeffs.size()); }
    const RatFunc<F>& coeff(int i) const { return coeffs[static_cast<std::size_t>(i)]; }
    RatFunc<F> one() const { return coeffs.at(0).one_like(); }

    // From [c_N, c_{N-1}, ..., c_0]; the leading coefficient is divided out.
    static OdeSpec from_highest_first(std::vector<RatFunc<F>> list) {
        if (list.size() < 2) throw DomainError("operator must have positive order");
        if (list.front().is_zero()) throw DomainError("leading coefficient is zero");
        OdeSpec spec;
        RatFunc<F> lead = list.front();
        for (std::size_t i = list.size(); i-- > 1;) spec.coeffs.push_back(list[i] / lead);
        return spec;
    }

    bool operator==(const OdeSpec& o) const { return coeffs == o.coeffs; }
};

// D^n y = h(y, Dy, ..., D^{n-1}y), given in the solved form y_n = g(y_1..y_{n-1})
// obtained by dividing through by the appropriate power of y.  Every term of g
// must have weight < n.
template <class F>
struct NonlinearSpec {
    int n = 0;
    MPoly<F> solved_form;  // universe y_1..y_{n-1}

    bool weight_condition_holds() const {
        WeightGrading g;
        for (const auto& [m, c] : solved_form.terms())
            if (g.weight(m) >= n) return false;
        return true;
    }
};

enum class ProblemCase { reciprocal, power, nonlinear };

inline std::string case_name(ProblemCase c) {
    switch (c) {
        case ProblemCase::reciprocal: return "reciprocal";
        case ProblemCase::power: return "power";
        case ProblemCase::nonlinear: return "nonlinear";
    }
    return "?";
}

template <class F>
struct Problem {
    ProblemCase kind = ProblemCase::reciprocal;
    std::optional<OdeSpec<F>> l1;        // linear cases
    std::optional<NonlinearSpec<F>> nl;  // nonlinear case
    OdeSpec<F> l2;
    int q = 0;  // power case only

    int n() const { return kind == ProblemCase::nonlinear ? nl->n : l1->order(); }
    int m() const { return l2.order(); }
    RatFunc<F> one() const { return l2.one(); }
    unsigned long long characteristic() const {
        return static_cast<unsigned long long>(one().characteristic());
    }
};

struct HypothesisViolation {
    std::string condition;  // e.g. "p > N1+N2-2"
    std::string detail;
};

struct HypothesisReport {
    std::vector<HypothesisViolation> violations;
    bool pass() const { return violations.empty(); }
    std::string message() const {
        std::string s;
        for (const auto& v : violations) {
            if (!s.empty()) s += "; ";
            s += "requires " + v.condition + " (" + v.detail + ")";
        }
        return s;
    }
};

template <class F>
HypothesisReport check_hypotheses(const Problem<F>& problem) {
    HypothesisReport rep;
    const int n = problem.n();
    const int m = problem.m();
    const unsigned long long p = problem.characteristic();
    if (problem.kind == ProblemCase::nonlinear) {
        if (n < 2)
            rep.violations.push_back({"n >= 2", "n = " + std::to_string(n)});
        if (!problem.nl->weight_condition_holds())
            rep.violations.push_back(
                {"weight(z^alpha) < n for every monomial",
                 "a term of the solved form has weight >= n = " + std::to_string(n)});
    } else if (n <= 1) {
        rep.violations.push_back({"N1 > 1", "N1 = " + std::to_string(n)});
    }
    if (m <= 1) rep.violations.push_back({"N2 > 1", "N2 = " + std::to_string(m)});
    if (problem.kind == ProblemCase::power) {
        if (problem.q < 1)
            rep.violations.push_back({"q >= 1", "q = " + std::to_string(problem.q)});
        else if (m > problem.q)
            rep.violations.push_back({"N2 <= q", "N2 = " + std::to_string(m) + ", q = " +
                                                     std::to_string(problem.q)});
    }
    if (p > 0) {
        if (problem.kind == ProblemCase::power) {
            long long bound = static_cast<long long>(problem.q + 1) * (n - 1) - 1;
            if (static_cast<long long>(p) <= bound)
                rep.violations.push_back({"p > (q+1)(N1-1)-1",
                                          "p = " + std::to_string(p) + ", (q+1)(N1-1)-1 = " +
                                              std::to_string(bound)});
        } else {
            // the nonlinear extension inherits the reciprocal-case condition with N1 = n
            long long bound = n + m - 2;
            if (static_cast<long long>(p) <= bound)
                rep.violations.push_back({"p > N1+N2-2", "p = " + std::to_string(p) +
                                                             ", N1+N2-2 = " + std::to_string(bound)});
        }
    }
    return rep;
}

// p_n with D^n(1/y) = p_n(y_1..y_n)/y; integer coefficients, weighted
// homogeneous of weight n.  Computed by the factorial-free form of the
// convolution recurrence: p_m = -sum_{j=1}^{m-1} C(m,j) y_j p_{m-j} - y_m.
template <class F>
std::vector<MPoly<F>> p_reciprocal_table(int n, const RatFunc<F>& one) {
    if (n < 0) throw DomainError("negative derivative order");
    const unsigned long long p = static_cast<unsigned long long>(one.characteristic());
    if (p > 0 && static_cast<unsigned long long>(n) >= p)
        throw HypothesisError("p_n needs n < p in characteristic p (n = " + std::to_string(n) +
                              ", p = " + std::to_string(p) + ")");
    const int nv = n;
    std::vector<MPoly<F>> table;
    table.push_back(MPoly<F>::constant(nv, one));
    for (int m = 1; m <= n; ++m) {
        MPoly<F> pm(nv);
        for (int j = 1; j <= m - 1; ++j) {
            RatFunc<F> c = one.make_int(binom(static_cast<unsigned long>(m),
                                              static_cast<unsigned long>(j)));
            pm = pm - (MPoly<F>::variable(nv, j, one) * table[static_cast<std::size_t>(m - j)])
                          .scale(c);
        }
        pm = pm - MPoly<F>::variable(nv, m, one);
        table.push_back(std::move(pm));
    }
    return table;
}

template <class F>
MPoly<F> p_reciprocal(int n, const RatFunc<F>& one) {
    return p_reciprocal_table(n, one).back();
}

// p_{n,q} with D^n(y^q) = y^q p_{n,q}(y_1..y_n); p_{n,1} = y_n and
// p_{m,q} = y_m + sum_{j=0}^{m-1} C(m,j) y_j p_{m-j,q-1} (y_0 = 1).
template <class F>
std::vector<MPoly<F>> p_power_table(int n, int q, const RatFunc<F>& one) {
    if (n < 0 || q < 1) throw DomainError("p_{n,q} needs n >= 0, q >= 1");
    const unsigned long long p = static_cast<unsigned long long>(one.characteristic());
    if (p > 0 && static_cast<unsigned long long>(n) >= p)
        throw HypothesisError("p_{n,q} needs n < p in characteristic p (n = " + std::to_string(n) +
                              ", p = " + std::to_string(p) + ")");
    const int nv = n;
    auto var_or_one = [&](int j) {
        return j == 0 ? MPoly<F>::constant(nv, one) : MPoly<F>::variable(nv, j, one);
    };
    std::vector<MPoly<F>> prev;  // p_{*,t-1}
    for (int t = 1; t <= q; ++t) {
        std::vector<MPoly<F>> cur;
        cur.push_back(MPoly<F>::constant(nv, one));  // p_{0,t} = 1
        for (int m = 1; m <= n; ++m) {
            MPoly<F> pm = MPoly<F>::variable(nv, m, one);
            if (t > 1) {
                for (int j = 0; j <= m - 1; ++j) {
                    RatFunc<F> c = one.make_int(binom(static_cast<unsigned long>(m),
                                                      static_cast<unsigned long>(j)));
                    pm = pm + (var_or_one(j) * prev[static_cast<std::size_t>(m - j)]).scale(c);
                }
            }
            cur.push_back(std::move(pm));
        }
        prev = std::move(cur);
    }
    return prev;
}

template <class F>
MPoly<F> p_power(int n, int q, const RatFunc<F>& one) {
    return p_power_table(n, q, one).back();
}

// The truncation homomorphism: y_j -> 0 for j >= n.
template <class F>
MPoly<F> phi_truncate(const MPoly<F>& f, int n) {
    return f.truncate_vars(n);
}

template <class F>
struct ReductionForm {
    int target_index = 0;  // y_{target_index} = expression
    MPoly<F> expression;   // universe y_1..y_{n-1}
};

namespace detail {

template <class F>
std::vector<ReductionForm<F>> iterate_reduction_forms(MPoly<F> seed, int n, int count,
                                                      const RatFunc<F>& one) {
    std::vector<ReductionForm<F>> forms;
    forms.push_back({n, seed});
    for (int k = 1; k < count; ++k) {
        const MPoly<F>& prev = forms.back().expression;
        // y_{n+k} = y_1 * R_{k-1} + delta(R_{k-1}); only y_n can newly appear,
        // replace it by R_0 to stay inside y_1..y_{n-1}.
        MPoly<F> t = MPoly<F>::variable(n, 1, one) * prev.extended(n) + prev.delta_derive();
        t = t.substitute(n, forms.front().expression.extended(n));
        forms.push_back({n + k, t.restricted(n - 1)});
    }
    return forms;
}

}  // namespace detail

// R_0, ..., R_{count-1} with y_{n+k} = R_k(y_1, ..., y_{n-1}).
template <class F>
std::vector<ReductionForm<F>> reduction_forms(const OdeSpec<F>& l1, int count) {
    const int n = l1.order();
    if (n < 2) throw HypothesisError("reduction forms need an operator of order >= 2");
    if (count < 1) throw DomainError("count must be positive");
    RatFunc<F> one = l1.one();
    MPoly<F> seed(n - 1);
    seed = seed - MPoly<F>::constant(n - 1, l1.coeff(0));
    for (int i = 1; i <= n - 1; ++i)
        seed = seed - MPoly<F>::variable(n - 1, i, one).scale(l1.coeff(i));
    return detail::iterate_reduction_forms(std::move(seed), n, count, one);
}

template <class F>
std::vector<ReductionForm<F>> reduction_forms(const NonlinearSpec<F>& nl, int count,
                                              const RatFunc<F>& one) {
    if (nl.n < 2) throw HypothesisError("nonlinear reduction needs n >= 2");
    if (count < 1) throw DomainError("count must be positive");
    if (!nl.weight_condition_holds())
        throw HypothesisError(
            "requires weight(z^alpha) < n for every monomial of the solved form");
    return detail::iterate_reduction_forms(nl.solved_form, nl.n, count, one);
}

namespace detail {

// Substitute all reduction forms (highest target index first) and restrict
// to y_1..y_{n-1}.
template <class F>
MPoly<F> eliminate_high_variables(MPoly<F> poly, const std::vector<ReductionForm<F>>& forms,
                                  int n) {
    const int nv = poly.nvars();
    for (std::size_t i = forms.size(); i-- > 0;) {
        if (forms[i].target_index > nv) continue;
        poly = poly.substitute(forms[i].target_index, forms[i].expression.extended(nv));
    }
    return poly.restricted(n - 1);
}

}  // namespace detail

// The polynomial system in y_1..y_{n-1} whose solutions carry D^j y / y.
template <class F>
std::vector<MPoly<F>> assemble_system(const Problem<F>& problem) {
    HypothesisReport hyp = check_hypotheses(problem);
    if (!hyp.pass()) throw HypothesisError(hyp.message());
    const int n = problem.n();
    const int m = problem.m();
    const RatFunc<F> one = problem.one();

    const bool power_case = problem.kind == ProblemCase::power;
    const int kmax = power_case ? (problem.q + 1) * (n - 1) - 1 - m : n - 2;
    const int maxidx = m + kmax;

    std::vector<MPoly<F>> ptab = power_case ? p_power_table(maxidx, problem.q, one)
                                            : p_reciprocal_table(maxidx, one);

    std::vector<ReductionForm<F>> forms;
    if (maxidx >= n) {
        const int count = maxidx - n + 1;
        forms = problem.kind == ProblemCase::nonlinear
                    ? reduction_forms(*problem.nl, count, one)
                    : reduction_forms(*problem.l1, count);
    }

    // D^j b_i for all coefficients of l2
    std::vector<std::vector<RatFunc<F>>> db;
    for (int i = 0; i < m; ++i) {
        std::vector<RatFunc<F>> row{problem.l2.coeff(i)};
        for (int j = 1; j <= kmax; ++j) row.push_back(row.back().derive());
        db.push_back(std::move(row));
    }

    std::vector<MPoly<F>> system;
    for (int k = 0; k <= kmax; ++k) {
        MPoly<F> P = ptab[static_cast<std::size_t>(m + k)];
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j <= k; ++j) {
                RatFunc<F> c = one.make_int(binom(static_cast<unsigned long>(k),
                                                  static_cast<unsigned long>(j))) *
                               db[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (c.is_zero()) continue;
                P = P + ptab[static_cast<std::size_t>(k - j + i)].scale(c);
            }
        }
        system.push_back(detail::eliminate_high_variables(std::move(P), forms, n));
    }
    return system;
}

// Per-equation leading forms under w(y_i) = i.
template <class F>
std::vector<MPoly<F>> leading_form_system(const std::vector<MPoly<F>>& system) {
    WeightGrading g;
    std::vector<MPoly<F>> out;
    out.reserve(system.size());
    for (const MPoly<F>& f : system) out.push_back(f.leading_form(g));
    return out;
}

}  // namespace logder

#endif
