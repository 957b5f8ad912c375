#pragma once

#include <cstdint>
#include <vector>

#include "diomax/ff.hpp"

namespace diomax::detail {

/// Discrete-log table wrapper over ff::Field: multiplication, inversion,
/// powers, the quadratic character and the absolute trace become table
/// lookups. Intended for the enumeration loops (fields up to a few million
/// elements).
class FastField {
public:
    explicit FastField(const ff::Field& F, bool with_trace = false)
        : f_(&F), q_(F.q()), qm1_(F.q() - 1) {
        logt_.assign(q_, 0);
        expt_.assign(2 * qm1_, 0);
        // find a multiplicative generator
        ff::elem_t g = 0;
        for (ff::elem_t a = 1; a < q_; ++a) {
            if (F.mult_order(a) == qm1_) { g = a; break; }
        }
        ff::elem_t x = 1;
        for (std::uint64_t i = 0; i < qm1_; ++i) {
            expt_[i] = expt_[i + qm1_] = static_cast<std::uint32_t>(x);
            logt_[x] = static_cast<std::uint32_t>(i);
            x = F.mul(x, g);
        }
        if (with_trace) {
            tr_.assign(q_, 0);
            for (ff::elem_t a = 0; a < q_; ++a)
                tr_[a] = F.abs_trace(a);
        }
    }

    const ff::Field& field() const { return *f_; }
    std::uint64_t q() const { return q_; }

    ff::elem_t add(ff::elem_t a, ff::elem_t b) const {
        return f_->p() == 2 ? (a ^ b) : f_->add(a, b);
    }
    ff::elem_t sub(ff::elem_t a, ff::elem_t b) const {
        return f_->p() == 2 ? (a ^ b) : f_->sub(a, b);
    }
    ff::elem_t mul(ff::elem_t a, ff::elem_t b) const {
        if (a == 0 || b == 0) return 0;
        return expt_[logt_[a] + logt_[b]];
    }
    ff::elem_t inv(ff::elem_t a) const {
        if (a == 0) throw division_by_zero("inverse of zero");
        return expt_[qm1_ - logt_[a]];
    }
    ff::elem_t pow(ff::elem_t a, std::uint64_t e) const {
        if (a == 0) return e == 0 ? 1 : 0;
        return expt_[(static_cast<std::uint64_t>(logt_[a]) * (e % qm1_)) % qm1_];
    }
    /// +1 square, -1 non-square, 0 zero (p odd).
    int chi(ff::elem_t a) const {
        if (a == 0) return 0;
        return (logt_[a] & 1) ? -1 : 1;
    }
    /// Square root in characteristic 2 (always exists, unique).
    ff::elem_t sqrt2(ff::elem_t a) const { return pow(a, q_ / 2); }
    /// Absolute trace to F_p (requires with_trace at construction).
    std::uint32_t trace(ff::elem_t a) const { return tr_[a]; }

    /// Horner evaluation of a packed-coefficient polynomial.
    ff::elem_t eval(const std::vector<ff::elem_t>& c, ff::elem_t x) const {
        ff::elem_t v = 0;
        for (std::size_t i = c.size(); i-- > 0;) v = add(mul(v, x), c[i]);
        return v;
    }

private:
    const ff::Field* f_;
    std::uint64_t q_, qm1_;
    std::vector<std::uint32_t> logt_, expt_;
    std::vector<std::uint32_t> tr_;
};

} // namespace diomax::detail
