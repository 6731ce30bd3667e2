#include "gleib/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>

#include "gleib/field.hpp"

namespace gleib {

AbelianGroup::AbelianGroup(int free_rank, std::vector<std::int64_t> torsion)
    : rank_{free_rank}, torsion_{std::move(torsion)} {
    if (rank_ < 0) throw InvalidGroup("negative free rank");
    for (std::size_t j = 0; j < torsion_.size(); ++j) {
        if (torsion_[j] < 2) throw InvalidGroup("torsion factor " + std::to_string(torsion_[j]) + " < 2");
        if (j > 0 && torsion_[j] % torsion_[j - 1] != 0) throw InvalidGroup("torsion factors must form a divisibility chain");
    }
}

AbelianGroup AbelianGroup::from_cyclic_factors(int free_rank, const std::vector<std::int64_t>& orders) {
    // split every order into prime powers, then rebuild the chain from the top
    std::map<std::int64_t, std::vector<std::int64_t>> powers;  // prime -> exponents as powers
    for (std::int64_t m : orders) {
        if (m < 0) throw InvalidGroup("negative cyclic order");
        if (m == 0) {
            ++free_rank;
            continue;
        }
        for (std::int64_t p = 2; p * p <= m; ++p) {
            std::int64_t pk = 1;
            while (m % p == 0) {
                m /= p;
                pk *= p;
            }
            if (pk > 1) powers[p].push_back(pk);
        }
        if (m > 1) powers[m].push_back(m);
    }
    std::size_t length = 0;
    for (auto& [p, list] : powers) {
        std::sort(list.begin(), list.end());
        length = std::max(length, list.size());
    }
    std::vector<std::int64_t> chain(length, 1);
    for (auto& [p, list] : powers) {
        // largest power goes to the last factor
        for (std::size_t i = 0; i < list.size(); ++i) chain[length - list.size() + i] *= list[i];
    }
    return AbelianGroup{free_rank, chain};
}

AbelianGroup AbelianGroup::parse(std::string_view text) {
    std::string t;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '_') t.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
    if (t == "TRIVIAL" || t == "0" || t == "1") return trivial();
    int rank = 0;
    std::vector<std::int64_t> orders;
    std::size_t pos = 0;
    while (pos <= t.size()) {
        std::size_t next = t.find('X', pos);
        std::string factor = t.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (factor.empty() || factor[0] != 'Z') throw ParseError("bad group spec '" + std::string{text} + "'");
        std::string rest = factor.substr(1);
        if (rest.empty()) {
            ++rank;
        } else if (rest[0] == '^') {
            int k = 0;
            auto [p, ec] = std::from_chars(rest.data() + 1, rest.data() + rest.size(), k);
            if (ec != std::errc{} || p != rest.data() + rest.size() || k < 0) throw ParseError("bad group spec '" + std::string{text} + "'");
            rank += k;
        } else {
            std::int64_t m = 0;
            auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), m);
            if (ec != std::errc{} || p != rest.data() + rest.size() || m < 1) throw ParseError("bad group spec '" + std::string{text} + "'");
            orders.push_back(m);
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return from_cyclic_factors(rank, orders);
}

std::string AbelianGroup::to_string() const {
    if (is_trivial()) return "trivial";
    std::string out;
    if (rank_ == 1) out = "Z";
    if (rank_ > 1) out = "Z^" + std::to_string(rank_);
    for (auto m : torsion_) {
        if (!out.empty()) out += "x";
        out += "Z" + std::to_string(m);
    }
    return out;
}

GroupElem::GroupElem(AbelianGroup group, std::vector<std::int64_t> coords)
    : group_{std::move(group)}, coords_{std::move(coords)} {
    if (static_cast<int>(coords_.size()) != group_.arity()) {
        throw InvalidGroup("element of " + group_.to_string() + " needs " + std::to_string(group_.arity()) + " coordinates");
    }
    for (int c = group_.free_rank(); c < group_.arity(); ++c) coords_[c] = mod_reduce(coords_[c], group_.modulus(c));
}

GroupElem GroupElem::zero(const AbelianGroup& group) {
    return GroupElem{group, std::vector<std::int64_t>(static_cast<std::size_t>(group.arity()), 0)};
}

bool GroupElem::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t x) { return x == 0; });
}

GroupElem GroupElem::operator-() const {
    std::vector<std::int64_t> c = coords_;
    for (auto& x : c) x = -x;
    return GroupElem{group_, std::move(c)};
}

GroupElem& GroupElem::operator+=(const GroupElem& other) {
    if (!(group_ == other.group_)) {
        throw GroupMismatch("cannot add elements of " + group_.to_string() + " and " + other.group_.to_string());
    }
    for (int c = 0; c < group_.arity(); ++c) {
        coords_[c] += other.coords_[c];
        if (c >= group_.free_rank()) coords_[c] = mod_reduce(coords_[c], group_.modulus(c));
    }
    return *this;
}

GroupElem operator*(std::int64_t k, const GroupElem& g) {
    std::vector<std::int64_t> c = g.coords_;
    for (auto& x : c) x *= k;
    return GroupElem{g.group_, std::move(c)};
}

std::string GroupElem::to_string() const {
    if (coords_.size() == 1) return std::to_string(coords_[0]);
    std::string out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(coords_[i]);
    }
    return out + ")";
}

GroupElem elem_add(const GroupElem& g, const GroupElem& h) { return g + h; }

std::optional<std::int64_t> elem_order(const GroupElem& g) {
    const auto& group = g.group();
    for (int c = 0; c < group.free_rank(); ++c) {
        if (g.coords()[c] != 0) return std::nullopt;
    }
    std::int64_t order = 1;
    for (int c = group.free_rank(); c < group.arity(); ++c) {
        const std::int64_t m = group.modulus(c);
        order = std::lcm(order, m / std::gcd(g.coords()[c], m));
    }
    return order;
}

void for_each_element(const AbelianGroup& group, std::int64_t free_bound,
                      const std::function<void(const GroupElem&)>& visit) {
    std::vector<std::int64_t> free_values{0};
    for (std::int64_t v = 1; v <= free_bound; ++v) {
        free_values.push_back(v);
        free_values.push_back(-v);
    }
    const int arity = group.arity();
    std::vector<std::size_t> radix(static_cast<std::size_t>(arity));
    for (int c = 0; c < arity; ++c) {
        radix[c] = c < group.free_rank() ? free_values.size() : static_cast<std::size_t>(group.modulus(c));
    }
    std::vector<std::size_t> digit(static_cast<std::size_t>(arity), 0);
    std::vector<std::int64_t> coords(static_cast<std::size_t>(arity), 0);
    while (true) {
        for (int c = 0; c < arity; ++c) {
            coords[c] = c < group.free_rank() ? free_values[digit[c]] : static_cast<std::int64_t>(digit[c]);
        }
        visit(GroupElem{group, coords});
        int c = arity - 1;
        while (c >= 0 && ++digit[c] == radix[c]) {
            digit[c] = 0;
            --c;
        }
        if (c < 0) return;
    }
}

std::vector<GroupElem> elements(const AbelianGroup& group, std::int64_t free_bound) {
    std::vector<GroupElem> out;
    for_each_element(group, free_bound, [&](const GroupElem& g) { out.push_back(g); });
    return out;
}

}  // namespace gleib
