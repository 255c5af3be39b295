#ifndef RSMZV_INDEX_HPP
#define RSMZV_INDEX_HPP

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace rsmzv {

// A composition (k_1, ..., k_d) of positive integers. The empty index is
// allowed. Summation convention: exponent k_d sits on the largest variable,
//   zeta(k) = sum_{0 < m_1 < ... < m_d} m_1^{-k_1} ... m_d^{-k_d},
// so the index is admissible when it is empty or its last part is >= 2.
class Index {
public:
    Index() = default;
    Index(std::initializer_list<int> parts);
    explicit Index(std::vector<int> parts);

    // Parses "3,2" (and "" for the empty index). Throws std::invalid_argument.
    static Index parse(std::string_view text);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int depth() const noexcept { return static_cast<int>(parts_.size()); }
    int weight() const noexcept;
    bool empty() const noexcept { return parts_.empty(); }
    bool admissible() const noexcept { return parts_.empty() || parts_.back() >= 2; }
    int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }

    // Parts [first, last).
    Index slice(int first, int last) const;
    Index reversed() const;

    std::string str() const;

    friend bool operator==(const Index&, const Index&) = default;
    // Weight first, then lexicographic on the parts.
    friend std::strong_ordering operator<=>(const Index& a, const Index& b);

private:
    std::vector<int> parts_;
};

// All compositions of n (ordered lexicographically); compositions(0) = {()}.
std::vector<Index> compositions(int n);

// All indices of weight 0..max_weight.
std::vector<Index> indices_up_to(int max_weight);

}  // namespace rsmzv

#endif
