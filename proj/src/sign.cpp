#include "kslope/sign.hpp"

#include "kslope/errors.hpp"

#include <algorithm>

namespace kslope {

const char* to_string(SignVerdict v) {
    switch (v) {
    case SignVerdict::StrictlyPositive: return "strictly_positive";
    case SignVerdict::NonnegativeWithZeros: return "nonnegative_with_zeros";
    case SignVerdict::AttainsNegative: return "attains_negative";
    }
    return "?";
}

namespace {

// Sturm chain of a squarefree polynomial: p, p', then negated remainders.
std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain;
    chain.push_back(p);
    Poly d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(std::move(d));
    while (true) {
        const Poly& prev = chain[chain.size() - 2];
        const Poly& last = chain.back();
        Poly r = divmod(prev, last).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

// Number of sign changes in the chain evaluated at x, zeros skipped.
int sign_variations(const std::vector<Poly>& chain, const Rational& x) {
    int count = 0;
    int last = 0;
    for (const Poly& p : chain) {
        int s = p(x).sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

// Divides out (x - root); q must vanish at root.
void deflate_at(Poly& q, const Rational& root) {
    Poly linear({-root, Rational(1)});
    auto [quot, rem] = divmod(q, linear);
    if (!rem.is_zero()) fail(errc::precondition, "deflation at a non-root");
    q = std::move(quot);
}

} // namespace

std::vector<Interval> isolate_roots(const Poly& p, const Interval& domain) {
    if (p.is_zero()) fail(errc::precondition, "cannot isolate roots of the zero polynomial");
    if (domain.lo > domain.hi) fail(errc::precondition, "inverted interval");

    Poly q = squarefree_part(p);
    std::vector<Rational> exact_roots;

    if (domain.is_point()) {
        if (q(domain.lo).is_zero()) return {Interval{domain.lo, domain.lo}};
        return {};
    }

    for (const Rational& endpoint : {domain.lo, domain.hi}) {
        if (q(endpoint).is_zero()) {
            exact_roots.push_back(endpoint);
            deflate_at(q, endpoint);
        }
    }

    // Isolate the remaining roots in the open interval. Whenever a bisection
    // midpoint happens to be a root we record it exactly, divide it out and
    // restart with the smaller polynomial (the Sturm chain changes).
    std::vector<Interval> isolating;
    bool restart = true;
    while (restart) {
        restart = false;
        isolating.clear();
        if (q.degree() < 1) break;
        std::vector<Poly> chain = sturm_chain(q);
        struct Segment {
            Rational a, b;
            int va, vb;
        };
        std::vector<Segment> stack;
        stack.push_back({domain.lo, domain.hi, sign_variations(chain, domain.lo), sign_variations(chain, domain.hi)});
        while (!stack.empty()) {
            Segment seg = std::move(stack.back());
            stack.pop_back();
            int count = seg.va - seg.vb;
            if (count <= 0) continue;
            if (count == 1) {
                isolating.push_back(Interval{seg.a, seg.b});
                continue;
            }
            Rational mid = (seg.a + seg.b) / Rational(2);
            if (q(mid).is_zero()) {
                exact_roots.push_back(mid);
                deflate_at(q, mid);
                restart = true;
                break;
            }
            int vm = sign_variations(chain, mid);
            stack.push_back({seg.a, mid, seg.va, vm});
            stack.push_back({mid, seg.b, vm, seg.vb});
        }
    }

    // Refine every isolating interval to the target width; each contains one
    // simple root of q with a strict sign change across it.
    Rational target = domain.width() / pow(Rational(2), 20);
    std::vector<Interval> result;
    for (Interval iv : isolating) {
        int lo_sign = q(iv.lo).sign();
        bool exact = false;
        while (iv.width() > target) {
            Rational mid = iv.midpoint();
            int ms = q(mid).sign();
            if (ms == 0) {
                exact_roots.push_back(mid);
                iv = Interval{mid, mid};
                exact = true;
                break;
            }
            if (ms == lo_sign) {
                iv.lo = mid;
            } else {
                iv.hi = mid;
            }
        }
        if (!exact) {
            // Keep refining until no previously found exact root sits inside.
            auto contains_exact = [&] {
                return std::any_of(exact_roots.begin(), exact_roots.end(),
                                   [&](const Rational& r) { return iv.contains(r); });
            };
            while (contains_exact()) {
                Rational mid = iv.midpoint();
                int ms = q(mid).sign();
                if (ms == 0) {
                    exact_roots.push_back(mid);
                    iv = Interval{mid, mid};
                    break;
                }
                if (ms == lo_sign) {
                    iv.lo = mid;
                } else {
                    iv.hi = mid;
                }
            }
            result.push_back(iv);
        }
    }

    for (const Rational& r : exact_roots) result.push_back(Interval{r, r});
    std::sort(result.begin(), result.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
    return result;
}

SignReport min_sign_on_interval(const Poly& p, const Interval& domain) {
    if (domain.lo > domain.hi) fail(errc::precondition, "inverted interval");
    SignReport report;

    if (p.is_zero()) {
        report.verdict = SignVerdict::NonnegativeWithZeros;
        report.zeros.push_back(domain);
        return report;
    }
    if (domain.is_point()) {
        int s = p(domain.lo).sign();
        if (s < 0) {
            report.verdict = SignVerdict::AttainsNegative;
            report.negative_witness = NegativeWitness{domain, p(domain.lo)};
        } else if (s == 0) {
            report.verdict = SignVerdict::NonnegativeWithZeros;
            report.zeros.push_back(domain);
        }
        return report;
    }

    report.zeros = isolate_roots(p, domain);

    // Sample the gaps between consecutive root intervals (and the flanks up
    // to the domain boundary); p has constant sign on each open gap.
    struct Gap {
        Interval where;
        Rational sample_value;
    };
    std::vector<Gap> negative_gaps;
    bool any_positive_gap = false;

    auto classify_gap = [&](const Rational& lo, const Rational& hi) {
        if (lo >= hi) return;
        Rational mid = (lo + hi) / Rational(2);
        Rational value = p(mid);
        int s = value.sign();
        if (s < 0) {
            negative_gaps.push_back(Gap{Interval{lo, hi}, std::move(value)});
        } else if (s > 0) {
            any_positive_gap = true;
        }
        // s == 0 cannot happen: gaps contain no roots.
    };

    Rational cursor = domain.lo;
    for (const Interval& z : report.zeros) {
        classify_gap(cursor, z.lo);
        cursor = z.hi;
    }
    classify_gap(cursor, domain.hi);

    if (!negative_gaps.empty()) {
        report.verdict = SignVerdict::AttainsNegative;
        const Gap* best = &negative_gaps.front();
        for (const Gap& g : negative_gaps)
            if (g.where.width() > best->where.width()) best = &g;
        report.negative_witness =
            NegativeWitness{best->where, p(best->where.midpoint())};
    } else if (!report.zeros.empty()) {
        report.verdict = SignVerdict::NonnegativeWithZeros;
    } else {
        report.verdict = any_positive_gap ? SignVerdict::StrictlyPositive : SignVerdict::NonnegativeWithZeros;
    }
    return report;
}

} // namespace kslope
