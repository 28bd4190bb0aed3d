#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

struct sqlite3;

namespace blinker {

// Transactional string key/value store in a single SQLite table. ":memory:"
// opens a private in-memory database.
class KvStore {
 public:
  explicit KvStore(const std::string& path);
  ~KvStore();
  KvStore(const KvStore&) = delete;
  KvStore& operator=(const KvStore&) = delete;
  KvStore(KvStore&&) noexcept;
  KvStore& operator=(KvStore&&) noexcept;

  std::optional<std::string> get(const std::string& key) const;
  void put(const std::string& key, const std::string& value);
  // Keys with the given prefix, in key order.
  std::vector<std::pair<std::string, std::string>> scan(
      const std::string& prefix) const;

  // Runs `body` inside BEGIN IMMEDIATE / COMMIT; rolls back and rethrows if
  // it throws.
  void transaction(const std::function<void()>& body);

 private:
  void exec(const char* sql);

  sqlite3* db_ = nullptr;
  std::unique_ptr<std::recursive_mutex> mutex_;
};

}  // namespace blinker
