#pragma once

#include <string>

#include "tautring/quotient.hpp"

namespace tautring {

// On-disk cache of finished quotient slices.  The key binds the presentation
// bytes and the engine version, so a hit reproduces ranks and normal forms
// byte-identically (the echelon basis is canonical).
class SliceCache {
 public:
  SliceCache(std::string dir, std::string key);

  static std::string key_for(const Presentation& pres);

  bool load(int degree, Slice& out) const;
  void store(int degree, const Slice& s) const;

  const std::string& dir() const { return dir_; }
  const std::string& key() const { return key_; }

 private:
  std::string path_for(int degree) const;
  std::string dir_;
  std::string key_;
};

}  // namespace tautring
