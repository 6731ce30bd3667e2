#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gleib/error.hpp"

namespace gleib {

/// Z^rank x Z_{m_1} x ... x Z_{m_s} in invariant-factor form
/// (m_j >= 2, m_1 | m_2 | ... | m_s).
class AbelianGroup {
public:
    AbelianGroup() = default;
    /// Throws InvalidGroup unless torsion is already in invariant-factor form.
    AbelianGroup(int free_rank, std::vector<std::int64_t> torsion);

    /// Normalizes arbitrary cyclic orders (1 allowed, 0 means Z) to
    /// invariant-factor form. Z_1 factors disappear.
    static AbelianGroup from_cyclic_factors(int free_rank, const std::vector<std::int64_t>& orders);

    static AbelianGroup trivial() { return {}; }
    static AbelianGroup integers(int rank = 1) { return AbelianGroup{rank, {}}; }
    static AbelianGroup cyclic(std::int64_t m) { return from_cyclic_factors(0, {m}); }
    static AbelianGroup integers_times_cyclic(std::int64_t m) { return from_cyclic_factors(1, {m}); }

    /// "trivial", "Z", "Z3", "ZxZ3", "Z^2", "Z2xZ4", ... (also accepts "Z_3").
    static AbelianGroup parse(std::string_view text);

    int free_rank() const { return rank_; }
    const std::vector<std::int64_t>& torsion() const { return torsion_; }
    /// r + s, the length of an element's coordinate vector.
    int arity() const { return rank_ + static_cast<int>(torsion_.size()); }
    bool is_trivial() const { return rank_ == 0 && torsion_.empty(); }
    bool is_finite() const { return rank_ == 0; }
    /// Modulus of coordinate c, 0 for free coordinates.
    std::int64_t modulus(int c) const { return c < rank_ ? 0 : torsion_[static_cast<std::size_t>(c - rank_)]; }

    std::string to_string() const;

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
    friend auto operator<=>(const AbelianGroup&, const AbelianGroup&) = default;

private:
    int rank_ = 0;
    std::vector<std::int64_t> torsion_;
};

/// An element of an AbelianGroup: free coordinates first, then torsion
/// coordinates reduced into [0, m_j).
class GroupElem {
public:
    GroupElem() = default;
    /// Reduces torsion coordinates; throws InvalidGroup on wrong arity.
    GroupElem(AbelianGroup group, std::vector<std::int64_t> coords);

    static GroupElem zero(const AbelianGroup& group);

    const AbelianGroup& group() const { return group_; }
    const std::vector<std::int64_t>& coords() const { return coords_; }
    bool is_zero() const;

    GroupElem operator-() const;
    GroupElem& operator+=(const GroupElem& other);
    friend GroupElem operator+(GroupElem a, const GroupElem& b) { return a += b; }
    friend GroupElem operator-(GroupElem a, const GroupElem& b) { return a += -b; }
    friend GroupElem operator*(std::int64_t k, const GroupElem& g);

    std::string to_string() const;

    friend bool operator==(const GroupElem&, const GroupElem&) = default;
    friend auto operator<=>(const GroupElem&, const GroupElem&) = default;

private:
    AbelianGroup group_;
    std::vector<std::int64_t> coords_;
};

/// Throws GroupMismatch when the groups differ.
GroupElem elem_add(const GroupElem& g, const GroupElem& h);
/// Least k >= 1 with k g = 0; nullopt stands for infinite order.
std::optional<std::int64_t> elem_order(const GroupElem& g);

/// Calls visit on every element whose free coordinates lie in
/// [-free_bound, free_bound]. Order: free coordinates 0, 1, -1, 2, -2, ...
/// (first coordinate slowest), torsion coordinates ascending.
void for_each_element(const AbelianGroup& group, std::int64_t free_bound,
                      const std::function<void(const GroupElem&)>& visit);
std::vector<GroupElem> elements(const AbelianGroup& group, std::int64_t free_bound);

}  // namespace gleib
