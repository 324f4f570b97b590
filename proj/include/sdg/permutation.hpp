#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sdg {

// Bijection of {1..n}, stored as the image array sigma(1..n).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    int n = static_cast<int>(img_.size());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : img_) {
      if (v < 1 || v > n || seen[v - 1])
        throw std::invalid_argument("not a bijection of 1..n");
      seen[v - 1] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    return Permutation(std::move(img));
  }

  // sigma_w of the paper's two-line arrays: the permutation with
  // sigma^{-1}(k) = w_k, so that gamma^{sigma_w}(d_1..d_n) = gamma(d_{w_1},..,d_{w_n}).
  static Permutation from_word(const std::vector<int>& w) {
    std::vector<int> img(w.size());
    for (int k = 1; k <= static_cast<int>(w.size()); ++k)
      img[static_cast<std::size_t>(w[static_cast<std::size_t>(k - 1)] - 1)] = k;
    return Permutation(std::move(img));
  }
  static Permutation from_word(const std::string& w) {
    std::vector<int> v;
    for (char c : w) v.push_back(c - '0');
    return from_word(v);
  }

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return img_; }

  Permutation inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i)-1)] = i;
    return Permutation(std::move(inv));
  }

  // (sigma tau)(j) = sigma(tau(j))
  friend Permutation operator*(const Permutation& sigma, const Permutation& tau) {
    if (sigma.size() != tau.size()) throw std::invalid_argument("size mismatch");
    std::vector<int> img(sigma.img_.size());
    for (int j = 1; j <= sigma.size(); ++j)
      img[static_cast<std::size_t>(j - 1)] = sigma(tau(j));
    return Permutation(std::move(img));
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.img_ == b.img_;
  }

 private:
  std::vector<int> img_;
};

}  // namespace sdg
