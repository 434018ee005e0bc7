#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <tuple>

#include <nlohmann/json.hpp>

#include "eqrim/eqlr.hpp"
#include "eqrim/error.hpp"

namespace eqrim {

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

using Key = std::tuple<int, int, Partition, Partition>;

nlohmann::json payload(const Partition& lhs, const Partition& rhs, const ClassicalExpansion& e) {
  return nlohmann::json{{"lhs", lhs.parts()}, {"rhs", rhs.parts()}, {"expansion", e}};
}

}  // namespace

struct ExpansionCache::Impl {
  mutable std::mutex mu;
  std::map<Key, ClassicalExpansion> entries;
  std::vector<std::string> warnings;
  std::ofstream out;
};

ExpansionCache::ExpansionCache() : impl_(std::make_unique<Impl>()) {}

ExpansionCache::ExpansionCache(const std::filesystem::path& file) : impl_(std::make_unique<Impl>()) {
  std::ifstream in(file);
  std::string line;
  std::size_t lineno = 0;
  while (in && std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto reject = [&](const std::string& why) {
      impl_->warnings.push_back(file.string() + ":" + std::to_string(lineno) + ": ignoring cache line (" + why + ")");
    };
    try {
      auto j = nlohmann::json::parse(line);
      std::string hash = j.at("hash").get<std::string>();
      j.erase("hash");
      if (fnv1a_hex(j.dump()) != hash) {
        reject("integrity hash mismatch");
        continue;
      }
      Partition lhs(j.at("lhs").get<std::vector<int>>());
      Partition rhs(j.at("rhs").get<std::vector<int>>());
      auto e = j.at("expansion").get<ClassicalExpansion>();
      impl_->entries.insert_or_assign(Key{e.k, e.N, lhs, rhs}, std::move(e));
    } catch (const std::exception& ex) {
      reject(ex.what());
    }
  }
  impl_->out.open(file, std::ios::app);
  if (!impl_->out) throw InputError("cannot open cache file " + file.string() + " for appending");
}

ExpansionCache::~ExpansionCache() = default;

std::optional<ClassicalExpansion> ExpansionCache::find(const Partition& lhs, const Partition& rhs, int k,
                                                       int N) const {
  std::lock_guard lock(impl_->mu);
  auto it = impl_->entries.find(Key{k, N, lhs, rhs});
  if (it == impl_->entries.end()) return std::nullopt;
  return it->second;
}

void ExpansionCache::store(const Partition& lhs, const Partition& rhs, const ClassicalExpansion& e) {
  std::lock_guard lock(impl_->mu);
  auto [it, inserted] = impl_->entries.try_emplace(Key{e.k, e.N, lhs, rhs}, e);
  if (inserted && impl_->out.is_open()) {
    impl_->out << encode_line(lhs, rhs, e) << '\n';
    impl_->out.flush();
  }
}

std::size_t ExpansionCache::size() const {
  std::lock_guard lock(impl_->mu);
  return impl_->entries.size();
}

std::vector<std::string> ExpansionCache::warnings() const {
  std::lock_guard lock(impl_->mu);
  return impl_->warnings;
}

std::string ExpansionCache::encode_line(const Partition& lhs, const Partition& rhs, const ClassicalExpansion& e) {
  nlohmann::json j = payload(lhs, rhs, e);
  std::string hash = fnv1a_hex(j.dump());
  j["hash"] = hash;
  return j.dump();
}

}  // namespace eqrim
