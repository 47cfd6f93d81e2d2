#include "tautring/cache.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tautring/version.hpp"

namespace tautring {

namespace {

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

}  // namespace

SliceCache::SliceCache(std::string dir, std::string key)
    : dir_(std::move(dir)), key_(std::move(key)) {
  std::filesystem::create_directories(dir_);
}

std::string SliceCache::key_for(const Presentation& pres) {
  return hex64(fnv1a(std::string(kEngineVersion) + "\n" + presentation_json(pres)));
}

std::string SliceCache::path_for(int degree) const {
  return dir_ + "/" + key_ + ".deg" + std::to_string(degree) + ".slice";
}

bool SliceCache::load(int degree, Slice& out) const {
  std::ifstream in(path_for(degree));
  if (!in) return false;
  std::string magic, version;
  long cols = 0, rank = 0;
  in >> magic >> version >> cols >> rank;
  if (magic != "tautring-slice" || version != kEngineVersion) return false;
  if (cols != out.ambient()) return false;
  for (long r = 0; r < rank; ++r) {
    int pivot = 0;
    size_t n = 0;
    if (!(in >> pivot >> n)) return false;
    SRow row;
    row.reserve(n);
    for (size_t i = 0; i < n; ++i) {
      int col = 0;
      std::string val;
      if (!(in >> col >> val)) return false;
      Rat v(val);
      v.canonicalize();
      row.emplace_back(col, v);
    }
    out.ech.adopt(pivot, std::move(row));
  }
  return true;
}

void SliceCache::store(int degree, const Slice& s) const {
  const std::string path = path_for(degree);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream outf(tmp);
    outf << "tautring-slice " << kEngineVersion << " " << s.ambient() << " " << s.rank()
         << "\n";
    for (const auto& [pivot, row] : s.ech.rows()) {
      outf << pivot << " " << row.size();
      for (const auto& [col, v] : row) outf << " " << col << " " << rat_str(v);
      outf << "\n";
    }
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace tautring
