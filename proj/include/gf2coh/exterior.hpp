#ifndef GF2COH_EXTERIOR_HPP
#define GF2COH_EXTERIOR_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gf2coh/gf2.hpp"

namespace gf2coh {

/// Monomial e^{i1} ∧ e^{i2} ∧ ... ∧ e^{iq} with i1 < i2 < ... < iq, all >= 1.
/// The empty index list is the scalar monomial 1.
struct Monomial {
    std::vector<int> indices;

    int rank() const { return static_cast<int>(indices.size()); }
    int degree() const;
    bool contains(int index) const;

    auto operator<=>(const Monomial&) const = default;
};

/// Concatenation of two monomials, reordered ascending; nullopt when an index
/// repeats (the product is zero).
std::optional<Monomial> merge_disjoint(const Monomial& a, const Monomial& b);

/// A form over GF(2): a finite set of monomials, each with coefficient 1.
/// Addition is symmetric difference, so x + x = 0.
class Form {
public:
    Form() = default;
    explicit Form(std::vector<Monomial> monomials);

    /// The one-form e^i. Index 0 yields the zero form (e^0 = 0).
    static Form unit(int index);
    static Form scalar();

    bool is_zero() const { return monos_.empty(); }
    std::size_t term_count() const { return monos_.size(); }
    const std::vector<Monomial>& monomials() const { return monos_; }
    bool contains(const Monomial& m) const;
    int max_index() const;   // 0 for the zero form and for the scalar

    /// Rank shared by all monomials, or nullopt when mixed or zero.
    std::optional<int> uniform_rank() const;
    std::optional<int> uniform_degree() const;

    void toggle(const Monomial& m);
    Form& operator+=(const Form& other);
    friend Form operator+(Form a, const Form& b) { a += b; return a; }

    friend bool operator==(const Form&, const Form&) = default;
    auto operator<=>(const Form&) const = default;

private:
    std::vector<Monomial> monos_;   // sorted, no duplicates
};

Form wedge(const Form& a, const Form& b);

/// Rank and degree components of a form, keyed by rank resp. degree.
std::map<int, Form> split_by_rank(const Form& f);
std::map<int, Form> split_by_degree(const Form& f);

/// All monomials of the given rank and degree with indices in
/// [min_index, max_index], in lexicographic order. This is the canonical
/// coordinate order for matrix columns. Rank 0 gives the scalar for degree 0.
std::vector<Monomial> enumerate_basis(int rank, int degree, int min_index, int max_index);

/// Coordinates of f with respect to an ordered monomial basis. Every monomial
/// of f must appear in the basis; otherwise std::invalid_argument.
BooleanVector to_coords(const Form& f, const std::vector<Monomial>& basis);
Form from_coords(const BooleanVector& v, const std::vector<Monomial>& basis);

/// Renders e.g. "e{2,4,10}"; the scalar monomial renders as "1".
std::string to_string(const Monomial& m);
/// Terms joined with "+", monomials in ascending order; zero renders as "0".
std::string to_string(const Form& f);

} // namespace gf2coh

#endif
