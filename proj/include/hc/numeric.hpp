#ifndef HC_NUMERIC_HPP
#define HC_NUMERIC_HPP

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hc {

using Int = mpz_class;
using Rat = mpq_class;

// End values x_1..x_n. Entries are small; all derived arithmetic is exact.
using Profile = std::vector<long long>;

struct DegenerateCase : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SizeLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SamplingFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct RankDeficient : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConeSpanFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// mpz/mpq lack long long constructors; values here always fit.
Int to_int(long long v);
Rat to_rat(long long v);

/// Renders a rational as "p" or "p/q".
std::string rat_str(const Rat& q);

/// Parses "p" or "p/q".
Rat rat_parse(const std::string& s);

Int factorial(unsigned n);
Int binomial(unsigned n, unsigned k);
/// n! / (k_1! k_2! ... k_m!); the parts must sum to n.
Int multinomial(unsigned n, const std::vector<unsigned>& parts);

long long profile_sum(const Profile& x);
/// Degree of the covers: sum of the positive entries.
long long profile_degree(const Profile& x);
void require_valid_profile(const Profile& x);

/// All ordered tuples of positive integers summing to total.
std::vector<std::vector<long long>> compositions(long long total);

} // namespace hc

#endif
