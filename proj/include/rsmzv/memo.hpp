#ifndef RSMZV_MEMO_HPP
#define RSMZV_MEMO_HPP

#include <functional>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

#include "rsmzv/word.hpp"

namespace rsmzv {

struct WordHash {
    std::size_t operator()(Word w) const noexcept
    {
        return std::hash<std::uint64_t>{}(w.bits() * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(w.length()));
    }
};

// Multi-reader / single-writer cache. Values are computed outside the lock,
// so a recursive computation may re-enter; a racing duplicate insert keeps
// the first value (all computations are deterministic).
template <typename Key, typename Value, typename Hash = std::hash<Key>>
class Memo {
public:
    std::optional<Value> find(const Key& k) const
    {
        std::shared_lock lock(mutex_);
        auto it = map_.find(k);
        if (it == map_.end())
            return std::nullopt;
        return it->second;
    }

    const Value& insert(const Key& k, Value v)
    {
        std::unique_lock lock(mutex_);
        return map_.try_emplace(k, std::move(v)).first->second;
    }

    template <typename F>
    Value get_or_compute(const Key& k, F&& compute)
    {
        if (auto hit = find(k))
            return *hit;
        Value v = compute();
        return insert(k, std::move(v));
    }

    std::size_t size() const
    {
        std::shared_lock lock(mutex_);
        return map_.size();
    }

    void clear()
    {
        std::unique_lock lock(mutex_);
        map_.clear();
    }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<Key, Value, Hash> map_;
};

}  // namespace rsmzv

#endif
