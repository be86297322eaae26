#ifndef CATMT_UTIL_H
#define CATMT_UTIL_H

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace catmt {

// Raised for malformed input files and inconsistent data. CLI maps it to
// exit code 2.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

std::vector<std::string> split(const std::string& s, char delim);
std::vector<std::string> split_ws(const std::string& s);
std::string join(const std::vector<std::string>& toks, const std::string& sep = " ");
std::string lowercase(const std::string& s);
std::string trim(const std::string& s);

bool file_exists(const std::string& path);
std::vector<std::string> read_lines(const std::string& path);
void write_lines(const std::string& path, const std::vector<std::string>& lines);

// key=value config file, '#' comments and blank lines ignored.
std::vector<std::pair<std::string, std::string>> read_kv_file(const std::string& path);

double log_sum_exp(const std::vector<double>& xs);

// Seeded RNG with uniform helpers that do not depend on the standard
// library's distribution implementations, so generated corpora and model
// initializations are identical across toolchains.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next_u64() { return engine_(); }

  // in [0, 1)
  double next_double() { return (engine_() >> 11) * 0x1.0p-53; }

  // in [0, n)
  uint64_t next_below(uint64_t n);

  // in [lo, hi] inclusive
  int64_t next_int(int64_t lo, int64_t hi);

  bool bernoulli(double p) { return next_double() < p; }

  // standard normal via Box-Muller, deterministic
  double next_gaussian();

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(next_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  // k distinct values from [0, n) excluding `excluded` (pass n for none)
  std::vector<int> sample_distinct(int n, int k, int excluded);

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

std::string format_double(double v);  // shortest round-trippable text

}  // namespace catmt

#endif
