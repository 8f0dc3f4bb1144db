#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace hyperring {

using Element = std::size_t;

/// Subset of a carrier {0, ..., universe-1}, stored as a dense bitset.
/// Ordering compares the sets as binary numbers (bit i has weight 2^i).
class Subset {
public:
    Subset() = default;
    explicit Subset(std::size_t universe) : n_(universe), words_((universe + 63) / 64, 0) {}
    Subset(std::size_t universe, std::initializer_list<Element> elems) : Subset(universe) {
        for (auto e : elems) insert(e);
    }

    static auto full(std::size_t universe) -> Subset {
        Subset s(universe);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }
    static auto of(std::size_t universe, std::span<const Element> elems) -> Subset {
        Subset s(universe);
        for (auto e : elems) s.insert(e);
        return s;
    }

    auto universe() const -> std::size_t { return n_; }
    auto contains(Element e) const -> bool { return (words_[e >> 6] >> (e & 63)) & 1U; }
    void insert(Element e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
    void erase(Element e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }
    void clear() {
        for (auto& w : words_) w = 0;
    }

    auto count() const -> std::size_t {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    auto empty() const -> bool {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    auto is_subset_of(const Subset& o) const -> bool {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    auto intersects(const Subset& o) const -> bool {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    auto operator|=(const Subset& o) -> Subset& {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    auto operator&=(const Subset& o) -> Subset& {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    auto operator-=(const Subset& o) -> Subset& {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend auto operator|(Subset a, const Subset& b) -> Subset { return a |= b; }
    friend auto operator&(Subset a, const Subset& b) -> Subset { return a &= b; }
    friend auto operator-(Subset a, const Subset& b) -> Subset { return a -= b; }

    auto complement() const -> Subset {
        Subset s = *this;
        for (auto& w : s.words_) w = ~w;
        s.trim();
        return s;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto w = words_[i];
            while (w) {
                auto b = static_cast<std::size_t>(std::countr_zero(w));
                f(i * 64 + b);
                w &= w - 1;
            }
        }
    }

    auto elements() const -> std::vector<Element> {
        std::vector<Element> out;
        out.reserve(count());
        for_each([&](Element e) { out.push_back(e); });
        return out;
    }

    auto first() const -> std::optional<Element> {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
        return std::nullopt;
    }

    auto words() const -> const std::vector<std::uint64_t>& { return words_; }

    auto operator==(const Subset& o) const -> bool = default;
    auto operator<=>(const Subset& o) const -> std::strong_ordering {
        if (auto c = n_ <=> o.n_; c != 0) return c;
        for (std::size_t i = words_.size(); i-- > 0;)
            if (auto c = words_[i] <=> o.words_[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

private:
    void trim() {
        if (n_ % 64 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace hyperring
