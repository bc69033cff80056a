#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ordcalc::ncalg {

using FamilyId = std::uint32_t;

enum class RelationKind : std::uint8_t { free, commute, q_commute };

struct FamilyTraits {
    bool scalar = false;          // commutes with every family, at every shift
    bool self_commuting = false;  // members of this family commute among themselves
    bool constant = false;        // fixed by the time shift (c' = c); implies scalar
    int index_count = 0;          // 0: plain family; n > 0: indexed members 1..n
};

inline FamilyTraits scalar_family() { return {true, true, false, 0}; }
inline FamilyTraits constant_family() { return {true, true, true, 0}; }
inline FamilyTraits indexed_family(int count, bool self_commuting = false) {
    return {false, self_commuting, false, count};
}

// Declaration table for variable families and their commutation relations.
// Relations are shift-invariant: a relation between two families applies to
// every primed copy of their members. Declare everything up front; the table
// freezes the first time an expression is built over it.
class Algebra {
public:
    FamilyId declare(const std::string& name, FamilyTraits traits = {}) {
        ensure_mutable();
        validate_name(name);
        if (by_name_.count(name)) throw std::invalid_argument("Algebra: family '" + name + "' already declared");
        if (traits.constant) traits.scalar = traits.self_commuting = true;
        FamilyId id = static_cast<FamilyId>(families_.size());
        families_.push_back({name, traits});
        by_name_.emplace(name, id);
        rebuild();
        return id;
    }

    void set_commute(const std::string& a, const std::string& b) { set_relation(a, b, RelationKind::commute, 0); }

    // For families a < b in canonical (name) order, b-then-a rewrites to
    // q^weight times a-then-b.
    void set_q_commute(const std::string& a, const std::string& b, int weight) {
        set_relation(a, b, RelationKind::q_commute, weight);
    }

    bool has_family(const std::string& name) const { return by_name_.count(name) != 0; }
    FamilyId id_of(const std::string& name) const {
        auto it = by_name_.find(name);
        if (it == by_name_.end()) throw std::invalid_argument("Algebra: unknown family '" + name + "'");
        return it->second;
    }
    const std::string& name_of(FamilyId f) const { return families_.at(f).name; }
    const FamilyTraits& traits_of(FamilyId f) const { return families_.at(f).traits; }
    std::size_t family_count() const { return families_.size(); }
    int rank_of(FamilyId f) const { return rank_.at(f); }

    RelationKind relation(FamilyId a, FamilyId b) const {
        return matrix_[a * families_.size() + b].kind;
    }
    // q exponent acquired when an atom of family `right` moves left past an
    // adjacent atom of family `left`.
    int swap_q_exponent(FamilyId left, FamilyId right) const {
        return matrix_[left * families_.size() + right].q_exp;
    }

    bool frozen() const { return frozen_; }
    void mark_used() const { frozen_ = true; }

private:
    struct Family {
        std::string name;
        FamilyTraits traits;
    };
    struct Rel {
        RelationKind kind = RelationKind::free;
        int q_exp = 0;
    };

    std::vector<Family> families_;
    std::map<std::string, FamilyId> by_name_;
    std::map<std::pair<FamilyId, FamilyId>, Rel> declared_;
    std::vector<int> rank_;
    std::vector<Rel> matrix_;
    mutable bool frozen_ = false;

    void ensure_mutable() const {
        if (frozen_) throw std::logic_error("Algebra: table is frozen once expressions exist");
    }

    static void validate_name(const std::string& name) {
        if (name.empty() || (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_'))
            throw std::invalid_argument("Algebra: bad family name '" + name + "'");
        for (char ch : name)
            if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
                throw std::invalid_argument("Algebra: bad family name '" + name + "'");
        if (name == "i" || name == "q" || name == "J")
            throw std::invalid_argument("Algebra: name '" + name + "' is reserved");
    }

    void set_relation(const std::string& a, const std::string& b, RelationKind kind, int weight) {
        ensure_mutable();
        FamilyId ia = id_of(a), ib = id_of(b);
        if (ia == ib) throw std::invalid_argument("Algebra: use FamilyTraits::self_commuting for a family with itself");
        if (traits_of(ia).scalar || traits_of(ib).scalar) {
            if (kind == RelationKind::q_commute)
                throw std::invalid_argument("Algebra: scalar families commute; q relation conflicts");
            return;  // scalars already commute with everything
        }
        // orient by canonical (name) order: moving the earlier-named atom left
        // past the later-named one multiplies by q^weight
        FamilyId earlier = name_of(ia) < name_of(ib) ? ia : ib;
        FamilyId later = earlier == ia ? ib : ia;
        declared_[{later, earlier}] = {kind, kind == RelationKind::q_commute ? weight : 0};
        declared_[{earlier, later}] = {kind, kind == RelationKind::q_commute ? -weight : 0};
        rebuild();
    }

    void rebuild() {
        const std::size_t n = families_.size();
        rank_.assign(n, 0);
        std::vector<FamilyId> order(n);
        for (std::size_t k = 0; k < n; ++k) order[k] = static_cast<FamilyId>(k);
        std::sort(order.begin(), order.end(),
                  [&](FamilyId x, FamilyId y) { return families_[x].name < families_[y].name; });
        for (std::size_t pos = 0; pos < n; ++pos) rank_[order[pos]] = static_cast<int>(pos);

        matrix_.assign(n * n, Rel{});
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                Rel r;
                const FamilyTraits& ta = families_[a].traits;
                const FamilyTraits& tb = families_[b].traits;
                if (a == b) {
                    r.kind = (ta.scalar || ta.self_commuting) ? RelationKind::commute : RelationKind::free;
                } else if (ta.scalar || tb.scalar) {
                    r.kind = RelationKind::commute;
                } else {
                    auto it = declared_.find({static_cast<FamilyId>(a), static_cast<FamilyId>(b)});
                    if (it != declared_.end()) r = it->second;
                }
                matrix_[a * n + b] = r;
            }
        }
    }
};

}  // namespace ordcalc::ncalg
