#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

namespace sunpoly {

/// Insert-only cache. Values are computed outside the lock; concurrent fills
/// of the same key are idempotent and the first insertion wins. Returned
/// references stay valid for the cache's lifetime.
template <class Key, class Value>
class ConcurrentMemo {
 public:
  template <class Compute>
  const Value& get(const Key& key, Compute&& compute) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = map_.find(key); it != map_.end()) return it->second;
    }
    Value fresh = compute();
    std::unique_lock lock(mutex_);
    return map_.try_emplace(key, std::move(fresh)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<Key, Value> map_;
};

}  // namespace sunpoly
