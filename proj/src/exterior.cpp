#include "gf2coh/exterior.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gf2coh {

int Monomial::degree() const { return std::accumulate(indices.begin(), indices.end(), 0); }

bool Monomial::contains(int index) const {
    return std::binary_search(indices.begin(), indices.end(), index);
}

std::optional<Monomial> merge_disjoint(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.indices.reserve(a.indices.size() + b.indices.size());
    std::merge(a.indices.begin(), a.indices.end(), b.indices.begin(), b.indices.end(),
               std::back_inserter(out.indices));
    for (std::size_t i = 1; i < out.indices.size(); ++i)
        if (out.indices[i] == out.indices[i - 1]) return std::nullopt;
    return out;
}

namespace {
void check_monomial(const Monomial& m) {
    for (std::size_t i = 0; i < m.indices.size(); ++i) {
        if (m.indices[i] < 1) throw std::invalid_argument("Monomial: indices must be positive");
        if (i > 0 && m.indices[i] <= m.indices[i - 1])
            throw std::invalid_argument("Monomial: indices must be strictly increasing");
    }
}
} // namespace

Form::Form(std::vector<Monomial> monomials) : monos_(std::move(monomials)) {
    for (const auto& m : monos_) check_monomial(m);
    std::sort(monos_.begin(), monos_.end());
    // pairs cancel mod 2
    std::vector<Monomial> reduced;
    for (std::size_t i = 0; i < monos_.size();) {
        std::size_t j = i;
        while (j < monos_.size() && monos_[j] == monos_[i]) ++j;
        if ((j - i) % 2 == 1) reduced.push_back(monos_[i]);
        i = j;
    }
    monos_ = std::move(reduced);
}

Form Form::unit(int index) {
    if (index < 0) throw std::invalid_argument("Form::unit: negative index");
    if (index == 0) return Form{};
    return Form{{Monomial{{index}}}};
}

Form Form::scalar() { return Form{{Monomial{}}}; }

bool Form::contains(const Monomial& m) const {
    return std::binary_search(monos_.begin(), monos_.end(), m);
}

int Form::max_index() const {
    int top = 0;
    for (const auto& m : monos_)
        if (!m.indices.empty()) top = std::max(top, m.indices.back());
    return top;
}

std::optional<int> Form::uniform_rank() const {
    if (monos_.empty()) return std::nullopt;
    const int r = monos_.front().rank();
    for (const auto& m : monos_)
        if (m.rank() != r) return std::nullopt;
    return r;
}

std::optional<int> Form::uniform_degree() const {
    if (monos_.empty()) return std::nullopt;
    const int d = monos_.front().degree();
    for (const auto& m : monos_)
        if (m.degree() != d) return std::nullopt;
    return d;
}

void Form::toggle(const Monomial& m) {
    check_monomial(m);
    auto it = std::lower_bound(monos_.begin(), monos_.end(), m);
    if (it != monos_.end() && *it == m)
        monos_.erase(it);
    else
        monos_.insert(it, m);
}

Form& Form::operator+=(const Form& other) {
    std::vector<Monomial> merged;
    merged.reserve(monos_.size() + other.monos_.size());
    std::size_t i = 0, j = 0;
    while (i < monos_.size() && j < other.monos_.size()) {
        if (monos_[i] < other.monos_[j])
            merged.push_back(monos_[i++]);
        else if (other.monos_[j] < monos_[i])
            merged.push_back(other.monos_[j++]);
        else {
            ++i;
            ++j;   // equal terms cancel
        }
    }
    merged.insert(merged.end(), monos_.begin() + static_cast<std::ptrdiff_t>(i), monos_.end());
    merged.insert(merged.end(), other.monos_.begin() + static_cast<std::ptrdiff_t>(j), other.monos_.end());
    monos_ = std::move(merged);
    return *this;
}

Form wedge(const Form& a, const Form& b) {
    Form out;
    for (const auto& ma : a.monomials())
        for (const auto& mb : b.monomials())
            if (auto prod = merge_disjoint(ma, mb)) out.toggle(*prod);
    return out;
}

std::map<int, Form> split_by_rank(const Form& f) {
    std::map<int, Form> parts;
    for (const auto& m : f.monomials()) parts[m.rank()].toggle(m);
    return parts;
}

std::map<int, Form> split_by_degree(const Form& f) {
    std::map<int, Form> parts;
    for (const auto& m : f.monomials()) parts[m.degree()].toggle(m);
    return parts;
}

namespace {
void enumerate_rec(int rank, int degree, int lo, int hi, std::vector<int>& prefix,
                   std::vector<Monomial>& out) {
    if (rank == 0) {
        if (degree == 0) out.push_back(Monomial{prefix});
        return;
    }
    // remaining indices are strictly increasing, so the smallest completion
    // from i is i + (i+1) + ... + (i+rank-1)
    for (int i = lo; i <= hi - rank + 1; ++i) {
        const long long min_sum = static_cast<long long>(rank) * i + static_cast<long long>(rank) * (rank - 1) / 2;
        if (min_sum > degree) break;
        prefix.push_back(i);
        enumerate_rec(rank - 1, degree - i, i + 1, hi, prefix, out);
        prefix.pop_back();
    }
}
} // namespace

std::vector<Monomial> enumerate_basis(int rank, int degree, int min_index, int max_index) {
    if (rank < 0) throw std::invalid_argument("enumerate_basis: negative rank");
    if (min_index < 1) throw std::invalid_argument("enumerate_basis: min_index must be >= 1");
    std::vector<Monomial> out;
    std::vector<int> prefix;
    enumerate_rec(rank, degree, min_index, max_index, prefix, out);
    return out;
}

BooleanVector to_coords(const Form& f, const std::vector<Monomial>& basis) {
    BooleanVector v(basis.size());
    if (f.is_zero()) return v;
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
    for (const auto& m : f.monomials()) {
        auto it = index.find(m);
        if (it == index.end())
            throw std::invalid_argument("to_coords: monomial " + to_string(m) + " not in basis");
        v.flip(it->second);
    }
    return v;
}

Form from_coords(const BooleanVector& v, const std::vector<Monomial>& basis) {
    if (v.size() != basis.size()) throw std::invalid_argument("from_coords: size mismatch");
    Form f;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (v.get(i)) f.toggle(basis[i]);
    return f;
}

std::string to_string(const Monomial& m) {
    if (m.indices.empty()) return "1";
    std::string s = "e{";
    for (std::size_t i = 0; i < m.indices.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(m.indices[i]);
    }
    s += '}';
    return s;
}

std::string to_string(const Form& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < f.monomials().size(); ++i) {
        if (i) s += '+';
        s += to_string(f.monomials()[i]);
    }
    return s;
}

} // namespace gf2coh
