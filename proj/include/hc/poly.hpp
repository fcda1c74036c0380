#ifndef HC_POLY_HPP
#define HC_POLY_HPP

#include "hc/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace hc {

/// Exact multivariate polynomial over the rationals; exponent vectors keyed
/// in graded-lex order for stable serialization.
struct Multipoly {
    struct GradedLex {
        bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
    };
    int nvars = 0;
    std::map<std::vector<int>, Rat, GradedLex> terms;

    static Multipoly zero(int nvars) { return Multipoly{nvars, {}}; }
    void add_term(const std::vector<int>& exps, const Rat& c);

    Rat eval(const Profile& x) const;
    Multipoly operator-(const Multipoly& other) const;
    Multipoly negated_vars() const; // p(-x)
    bool operator==(const Multipoly& other) const;

    int total_degree() const;  // -1 for the zero polynomial
    int min_degree() const;    // -1 for the zero polynomial
    bool parity_pure(int parity) const;

    std::string str(const std::string& stem = "x") const;
};

/// Exact dense solve of A v = b over the rationals. Returns false when the
/// system has no unique solution on the column space (rank deficiency).
bool solve_exact(std::vector<std::vector<Rat>> a, std::vector<Rat> b, std::vector<Rat>& out);

/// Row-reduce [A | B] to solve A X = B for square invertible A.
bool solve_exact_multi(std::vector<std::vector<Rat>> a, std::vector<std::vector<Rat>> b,
                       std::vector<std::vector<Rat>>& out);

} // namespace hc

#endif
