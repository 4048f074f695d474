#include "pirgb/howell.hpp"

#include <algorithm>
#include <stdexcept>

#include "pirgb/residue.hpp"

namespace pirgb {

namespace {

std::size_t first_nonzero(const Row& r) {
    for (std::size_t j = 0; j < r.size(); ++j)
        if (r[j] != 0) return j;
    return r.size();
}

Row reduce_row(Row r, const mpz_class& n) {
    for (auto& x : r) {
        x %= n;
        if (x < 0) x += n;
    }
    return r;
}

Row combine(const Row& r1, const Row& r2, const mpz_class& c1,
            const mpz_class& c2, const mpz_class& n) {
    Row out(r1.size());
    for (std::size_t j = 0; j < r1.size(); ++j) {
        out[j] = (c1 * r1[j] + c2 * r2[j]) % n;
        if (out[j] < 0) out[j] += n;
    }
    return out;
}

}  // namespace

std::vector<Row> howell_form(const std::vector<Row>& rows, const mpz_class& n) {
    if (n < 2) throw std::invalid_argument("howell_form: modulus must be >= 2");
    if (rows.empty()) return {};
    const std::size_t cols = rows.front().size();
    // pending[j]: rows whose first nonzero entry is at column j; the slot
    // at `cols` collects zero rows.
    std::vector<std::vector<Row>> pending(cols + 1);
    for (const auto& r : rows) {
        if (r.size() != cols)
            throw std::invalid_argument("howell_form: ragged rows");
        Row rr = reduce_row(r, n);
        pending[first_nonzero(rr)].push_back(std::move(rr));
    }

    std::vector<Row> H;
    for (std::size_t j = 0; j < cols; ++j) {
        auto& bucket = pending[j];
        while (bucket.size() > 1) {
            Row r1 = std::move(bucket[bucket.size() - 2]);
            Row r2 = std::move(bucket.back());
            bucket.pop_back();
            bucket.pop_back();
            Xgcd e = xgcd(r1[j], r2[j]);
            Row merged = combine(r1, r2, e.s, e.t, n);
            Row zeroed = combine(r2, r1, r1[j] / e.g, -(r2[j] / e.g), n);
            bucket.push_back(std::move(merged));
            std::size_t fz = first_nonzero(zeroed);
            if (fz < cols) pending[fz].push_back(std::move(zeroed));
        }
        if (bucket.empty()) continue;
        Row r = std::move(bucket.front());
        bucket.clear();
        mpz_class u = unit_stabilizer(r[j], n);
        for (auto& x : r) {
            x = (x * u) % n;
            if (x < 0) x += n;
        }
        // Annihilator completion keeps the span membership-testable.
        mpz_class ann = n / r[j];  // pivot divides n after stabilization
        if (ann != 1) {
            Row shifted(cols);
            for (std::size_t t = 0; t < cols; ++t)
                shifted[t] = (r[t] * ann) % n;
            std::size_t fz = first_nonzero(shifted);
            if (fz < cols) pending[fz].push_back(std::move(shifted));
        }
        H.push_back(std::move(r));
    }

    // Reduce entries above each pivot modulo the pivot value.
    for (std::size_t i = 0; i < H.size(); ++i) {
        std::size_t pj = first_nonzero(H[i]);
        const mpz_class& d = H[i][pj];
        for (std::size_t k = 0; k < i; ++k) {
            mpz_class q = H[k][pj] / d;
            if (q == 0) continue;
            for (std::size_t t = pj; t < cols; ++t) {
                H[k][t] = (H[k][t] - q * H[i][t]) % n;
                if (H[k][t] < 0) H[k][t] += n;
            }
        }
    }
    return H;
}

bool in_row_span(const std::vector<Row>& howell, Row v, const mpz_class& n) {
    v = reduce_row(std::move(v), n);
    std::size_t i = 0;
    for (;;) {
        std::size_t j = first_nonzero(v);
        if (j == v.size()) return true;
        while (i < howell.size() && first_nonzero(howell[i]) < j) ++i;
        if (i == howell.size() || first_nonzero(howell[i]) != j) return false;
        const mpz_class& d = howell[i][j];
        if (!mpz_divisible_p(v[j].get_mpz_t(), d.get_mpz_t())) return false;
        mpz_class q = v[j] / d;
        for (std::size_t t = j; t < v.size(); ++t) {
            v[t] = (v[t] - q * howell[i][t]) % n;
            if (v[t] < 0) v[t] += n;
        }
    }
}

}  // namespace pirgb
