#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace supred {

using EventId = std::uint32_t;

/// Fixed-universe bitset over event ids `[0, universe)`.
class EventSet {
public:
    EventSet() = default;
    explicit EventSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    std::size_t universe() const noexcept { return universe_; }

    void insert(EventId e) { words_[e / 64] |= bit(e); }
    void erase(EventId e) { words_[e / 64] &= ~bit(e); }
    bool contains(EventId e) const { return e < universe_ && (words_[e / 64] & bit(e)) != 0; }

    bool empty() const {
        for (auto w : words_)
            if (w != 0) return false;
        return true;
    }

    std::size_t size() const {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(__builtin_popcountll(w));
        return n;
    }

    bool intersects(const EventSet& other) const {
        for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i)
            if ((words_[i] & other.words_[i]) != 0) return true;
        return false;
    }

    bool subset_of(const EventSet& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t o = i < other.words_.size() ? other.words_[i] : 0;
            if ((words_[i] & ~o) != 0) return false;
        }
        return true;
    }

    EventSet& operator|=(const EventSet& other) {
        for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i)
            words_[i] |= other.words_[i];
        return *this;
    }

    EventSet& operator-=(const EventSet& other) {
        for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i)
            words_[i] &= ~other.words_[i];
        return *this;
    }

    /// Members in increasing id order (which is alphabet order).
    std::vector<EventId> members() const {
        std::vector<EventId> out;
        for (EventId e = 0; e < universe_; ++e)
            if (contains(e)) out.push_back(e);
        return out;
    }

    friend bool operator==(const EventSet&, const EventSet&) = default;

private:
    static std::uint64_t bit(EventId e) { return std::uint64_t{1} << (e % 64); }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace supred
