#include "hc/numeric.hpp"

#include <numeric>

namespace hc {

Int to_int(long long v) {
    bool neg = v < 0;
    unsigned long long mag =
        neg ? 0ULL - static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v);
    Int r;
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(mag), 0, 0, &mag);
    if (neg) mpz_neg(r.get_mpz_t(), r.get_mpz_t());
    return r;
}

Rat to_rat(long long v) {
    return Rat(to_int(v));
}

std::string rat_str(const Rat& q) {
    Rat c(q);
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rat rat_parse(const std::string& s) {
    Rat q(s);
    q.canonicalize();
    return q;
}

Int factorial(unsigned n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

Int multinomial(unsigned n, const std::vector<unsigned>& parts) {
    unsigned total = 0;
    Int m = 1;
    for (unsigned p : parts) {
        total += p;
        m *= binomial(total, p);
    }
    if (total != n) throw std::invalid_argument("multinomial: parts do not sum to n");
    return m;
}

long long profile_sum(const Profile& x) {
    return std::accumulate(x.begin(), x.end(), 0LL);
}

long long profile_degree(const Profile& x) {
    long long d = 0;
    for (long long v : x)
        if (v > 0) d += v;
    return d;
}

void require_valid_profile(const Profile& x) {
    if (x.size() < 2) throw std::invalid_argument("profile needs at least two entries");
    if (profile_sum(x) != 0) throw std::invalid_argument("profile entries must sum to zero");
    for (long long v : x)
        if (v == 0) throw std::invalid_argument("profile entries must be nonzero");
}

std::vector<std::vector<long long>> compositions(long long total) {
    std::vector<std::vector<long long>> out;
    if (total <= 0) return out;
    std::vector<long long> cur;
    auto rec = [&](auto&& self, long long rest) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (long long p = 1; p <= rest; ++p) {
            cur.push_back(p);
            self(self, rest - p);
            cur.pop_back();
        }
    };
    rec(rec, total);
    return out;
}

} // namespace hc
