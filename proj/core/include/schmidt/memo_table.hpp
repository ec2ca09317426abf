#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>

namespace schmidt {

/// Read-mostly memo shared between worker threads. Values are computed
/// outside the lock; if two threads race on the same key the first insert
/// wins and both callers see that value.
template <typename Key, typename Value>
class MemoTable {
 public:
  std::optional<Value> find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  Value get_or_compute(const Key& key, const std::function<Value()>& compute) {
    if (auto hit = find(key)) return *hit;
    Value value = compute();
    std::unique_lock lock(mutex_);
    return entries_.try_emplace(key, std::move(value)).first->second;
  }

  void insert(const Key& key, Value value) {
    std::unique_lock lock(mutex_);
    entries_.insert_or_assign(key, std::move(value));
  }

  std::map<Key, Value> snapshot() const {
    std::shared_lock lock(mutex_);
    return entries_;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, Value> entries_;
};

}  // namespace schmidt
