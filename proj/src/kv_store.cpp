#include "blinker/kv_store.hpp"

#include <sqlite3.h>

#include "blinker/errors.hpp"

namespace blinker {

namespace {

class Statement {
 public:
  Statement(sqlite3* db, const char* sql) {
    if (sqlite3_prepare_v2(db, sql, -1, &stmt_, nullptr) != SQLITE_OK) {
      throw Error(std::string("sqlite prepare: ") + sqlite3_errmsg(db));
    }
  }
  ~Statement() { sqlite3_finalize(stmt_); }
  Statement(const Statement&) = delete;
  Statement& operator=(const Statement&) = delete;

  void bind(int pos, const std::string& text) {
    sqlite3_bind_text(stmt_, pos, text.data(), static_cast<int>(text.size()),
                      SQLITE_TRANSIENT);
  }
  int step() { return sqlite3_step(stmt_); }
  std::string column(int col) const {
    const auto* text =
        reinterpret_cast<const char*>(sqlite3_column_text(stmt_, col));
    return text ? std::string(text, sqlite3_column_bytes(stmt_, col))
                : std::string();
  }

 private:
  sqlite3_stmt* stmt_ = nullptr;
};

}  // namespace

KvStore::KvStore(const std::string& path)
    : mutex_(std::make_unique<std::recursive_mutex>()) {
  if (sqlite3_open(path.c_str(), &db_) != SQLITE_OK) {
    const std::string msg = db_ ? sqlite3_errmsg(db_) : "out of memory";
    sqlite3_close(db_);
    db_ = nullptr;
    throw Error("cannot open store '" + path + "': " + msg);
  }
  sqlite3_busy_timeout(db_, 5000);
  exec("CREATE TABLE IF NOT EXISTS kv (key TEXT PRIMARY KEY, value TEXT "
       "NOT NULL)");
}

KvStore::~KvStore() {
  if (db_) sqlite3_close(db_);
}

KvStore::KvStore(KvStore&& other) noexcept
    : db_(std::exchange(other.db_, nullptr)), mutex_(std::move(other.mutex_)) {}

KvStore& KvStore::operator=(KvStore&& other) noexcept {
  if (this != &other) {
    if (db_) sqlite3_close(db_);
    db_ = std::exchange(other.db_, nullptr);
    mutex_ = std::move(other.mutex_);
  }
  return *this;
}

void KvStore::exec(const char* sql) {
  char* err = nullptr;
  if (sqlite3_exec(db_, sql, nullptr, nullptr, &err) != SQLITE_OK) {
    const std::string msg = err ? err : "unknown error";
    sqlite3_free(err);
    throw Error("sqlite: " + msg);
  }
}

std::optional<std::string> KvStore::get(const std::string& key) const {
  std::lock_guard lock(*mutex_);
  Statement stmt(db_, "SELECT value FROM kv WHERE key = ?1");
  stmt.bind(1, key);
  if (stmt.step() == SQLITE_ROW) return stmt.column(0);
  return std::nullopt;
}

void KvStore::put(const std::string& key, const std::string& value) {
  std::lock_guard lock(*mutex_);
  Statement stmt(db_,
                 "INSERT INTO kv (key, value) VALUES (?1, ?2) "
                 "ON CONFLICT(key) DO UPDATE SET value = excluded.value");
  stmt.bind(1, key);
  stmt.bind(2, value);
  if (stmt.step() != SQLITE_DONE) {
    throw Error(std::string("sqlite put: ") + sqlite3_errmsg(db_));
  }
}

std::vector<std::pair<std::string, std::string>> KvStore::scan(
    const std::string& prefix) const {
  std::lock_guard lock(*mutex_);
  // Keys are compared bytewise; the upper bound is the prefix followed by
  // the largest byte.
  Statement stmt(db_,
                 "SELECT key, value FROM kv WHERE key >= ?1 AND key < ?2 "
                 "ORDER BY key");
  stmt.bind(1, prefix);
  stmt.bind(2, prefix + "\xFF");
  std::vector<std::pair<std::string, std::string>> out;
  while (stmt.step() == SQLITE_ROW) {
    out.emplace_back(stmt.column(0), stmt.column(1));
  }
  return out;
}

void KvStore::transaction(const std::function<void()>& body) {
  std::lock_guard lock(*mutex_);
  exec("BEGIN IMMEDIATE");
  try {
    body();
  } catch (...) {
    exec("ROLLBACK");
    throw;
  }
  exec("COMMIT");
}

}  // namespace blinker
