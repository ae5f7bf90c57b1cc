#include "charfluct/characters.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace charfluct {

namespace {

using BetaSet = std::vector<int>;  // strictly increasing

BetaSet beta_numbers(const std::vector<int>& rows) {
  const int m = static_cast<int>(rows.size());
  BetaSet beta(m);
  for (int i = 0; i < m; ++i) beta[i] = rows[i] + (m - 1 - i);
  std::sort(beta.begin(), beta.end());
  return beta;
}

std::vector<int> rows_from_beta(BetaSet beta) {
  std::sort(beta.begin(), beta.end());
  const int m = static_cast<int>(beta.size());
  std::vector<int> rows;
  for (int i = m - 1; i >= 0; --i) {
    int row = beta[i] - i;
    if (row > 0) rows.push_back(row);
  }
  std::sort(rows.begin(), rows.end(), std::greater<int>());
  return rows;
}

struct MnKey {
  std::vector<int> rows;
  std::vector<int> rho;
  auto operator<=>(const MnKey&) const = default;
};

long long mn_recurse(const std::vector<int>& rows, const std::vector<int>& rho,
                     std::map<MnKey, long long>& memo) {
  if (rho.empty()) return rows.empty() ? 1 : 0;
  MnKey key{rows, rho};
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  const int r = rho.front();
  const std::vector<int> rest(rho.begin() + 1, rho.end());
  BetaSet beta = beta_numbers(rows);
  long long total = 0;
  for (size_t i = 0; i < beta.size(); ++i) {
    int target = beta[i] - r;
    if (target < 0) continue;
    if (std::binary_search(beta.begin(), beta.end(), target)) continue;
    // Height of the strip = number of beta values jumped over.
    int jumped = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++jumped;
    BetaSet next = beta;
    next[i] = target;
    long long sub = mn_recurse(rows_from_beta(next), rest, memo);
    total += (jumped % 2 == 0) ? sub : -sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

long long mn_character(const YoungDiagram& la, const CycleType& rho) {
  if (la.box_count() != rho.weight())
    throw std::invalid_argument("diagram and class sizes differ");
  std::map<MnKey, long long> memo;
  return mn_recurse(la.rows(), rho.parts(), memo);
}

Int hook_dimension(const YoungDiagram& la) {
  const auto& rows = la.rows();
  const auto cols = la.conjugate().rows();
  Int hooks = 1;
  for (size_t i = 0; i < rows.size(); ++i) {
    for (int j = 1; j <= rows[i]; ++j) {
      int arm = rows[i] - j;
      int leg = cols[j - 1] - static_cast<int>(i) - 1;
      hooks *= (arm + leg + 1);
    }
  }
  return factorial(la.box_count()) / hooks;
}

Int class_symmetry_order(const CycleType& rho) {
  Int z = 1;
  int run = 1;
  const auto& parts = rho.parts();
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i + 1 < parts.size() && parts[i + 1] == parts[i]) {
      ++run;
      continue;
    }
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(parts[i]),
                  static_cast<unsigned long>(run));
    z *= p * factorial(run);
    run = 1;
  }
  return z;
}

CharacterTable CharacterTable::build(int q) {
  if (q < 0 || q > kMaxExactQ)
    throw std::invalid_argument("character table limited to q <= " +
                                std::to_string(kMaxExactQ));
  CharacterTable t;
  t.q_ = q;
  t.lambdas_ = diagrams_of(q);
  for (const auto& la : t.lambdas_) t.classes_.push_back(la.row_type());
  const int count = static_cast<int>(t.lambdas_.size());
  t.chi_.assign(count, std::vector<long long>(count, 0));
  t.dims_.resize(count);
  t.class_sizes_.resize(count);
  t.z_.resize(count);
  Int qfact = factorial(q);
  for (int c = 0; c < count; ++c) {
    t.z_[c] = class_symmetry_order(t.classes_[c]);
    t.class_sizes_[c] = qfact / t.z_[c];
  }

  // Rows are independent; spread diagrams across a few workers, each with
  // its own recursion memo.
  unsigned workers =
      std::min<unsigned>(std::thread::hardware_concurrency(), 8);
  if (workers == 0) workers = 1;
  auto fill_rows = [&](int begin, int end) {
    std::map<MnKey, long long> memo;
    for (int l = begin; l < end; ++l) {
      for (int c = 0; c < count; ++c) {
        t.chi_[l][c] =
            mn_recurse(t.lambdas_[l].rows(), t.classes_[c].parts(), memo);
      }
    }
  };
  if (workers == 1 || count < 8) {
    fill_rows(0, count);
  } else {
    std::vector<std::thread> threads;
    int chunk = (count + static_cast<int>(workers) - 1) / workers;
    for (int begin = 0; begin < count; begin += chunk) {
      threads.emplace_back(fill_rows, begin, std::min(begin + chunk, count));
    }
    for (auto& th : threads) th.join();
  }

  int id_class = 0;
  for (int c = 0; c < count; ++c)
    if (t.classes_[c].multiplicity(1) == q) id_class = c;
  for (int l = 0; l < count; ++l) {
    t.dims_[l] = hook_dimension(t.lambdas_[l]);
    // The identity column must reproduce the hook-length dimension.
    if (Int(static_cast<long>(t.chi_[l][id_class])) != t.dims_[l])
      throw std::logic_error("dimension mismatch between hooks and recursion");
  }
  t.finish_indexing();
  return t;
}

void CharacterTable::finish_indexing() {
  lambda_index_.clear();
  class_index_.clear();
  for (size_t i = 0; i < lambdas_.size(); ++i)
    lambda_index_[lambdas_[i]] = static_cast<int>(i);
  for (size_t i = 0; i < classes_.size(); ++i)
    class_index_[classes_[i]] = static_cast<int>(i);
}

int CharacterTable::diagram_index(const YoungDiagram& la) const {
  auto it = lambda_index_.find(la);
  if (it == lambda_index_.end())
    throw std::invalid_argument("diagram not in table: " + la.str());
  return it->second;
}

int CharacterTable::class_index(const CycleType& rho) const {
  auto it = class_index_.find(rho);
  if (it == class_index_.end())
    throw std::invalid_argument("class not in table: " + rho.str());
  return it->second;
}

long long CharacterTable::character(const YoungDiagram& la,
                                    const CycleType& rho) const {
  return chi_[diagram_index(la)][class_index(rho)];
}

Rational CharacterTable::normalized_character(const YoungDiagram& la,
                                              const CycleType& rho) const {
  int l = diagram_index(la);
  return Rational(Int(static_cast<long>(chi_[l][class_index(rho)]))) / Rational(dims_[l]);
}

const Int& CharacterTable::dimension(const YoungDiagram& la) const {
  return dims_[diagram_index(la)];
}

const Int& CharacterTable::class_size(const CycleType& rho) const {
  return class_sizes_[class_index(rho)];
}

nlohmann::json CharacterTable::to_json() const {
  nlohmann::json j;
  j["version"] = 1;
  j["q"] = q_;
  nlohmann::json lambdas = nlohmann::json::array();
  for (const auto& la : lambdas_) lambdas.push_back(la.str());
  j["diagrams"] = std::move(lambdas);
  j["chi"] = chi_;
  nlohmann::json dims = nlohmann::json::array();
  for (const auto& d : dims_) dims.push_back(d.get_str());
  j["dims"] = std::move(dims);
  return j;
}

CharacterTable CharacterTable::from_json(const nlohmann::json& j) {
  if (j.at("version").get<int>() != 1)
    throw std::runtime_error("unsupported cache version");
  CharacterTable t;
  t.q_ = j.at("q").get<int>();
  for (const auto& s : j.at("diagrams"))
    t.lambdas_.push_back(YoungDiagram::parse(s.get<std::string>()));
  for (const auto& la : t.lambdas_) t.classes_.push_back(la.row_type());
  t.chi_ = j.at("chi").get<std::vector<std::vector<long long>>>();
  for (const auto& s : j.at("dims"))
    t.dims_.emplace_back(s.get<std::string>());
  if (t.chi_.size() != t.lambdas_.size() || t.dims_.size() != t.lambdas_.size())
    throw std::runtime_error("corrupt character cache");
  Int qfact = factorial(t.q_);
  for (const auto& rho : t.classes_) {
    t.z_.push_back(class_symmetry_order(rho));
    t.class_sizes_.push_back(qfact / t.z_.back());
  }
  t.finish_indexing();
  return t;
}

const CharacterTable& CharacterTable::cached(int q) {
  static std::mutex mutex;
  static std::map<int, CharacterTable> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;

  const char* dir = std::getenv("CHARFLUCT_CACHE_DIR");
  std::string path;
  if (dir && *dir) {
    path = std::string(dir) + "/chartable-q" + std::to_string(q) + "-v1.json";
    std::ifstream in(path);
    if (in) {
      try {
        nlohmann::json j;
        in >> j;
        auto table = from_json(j);
        if (table.q() == q)
          return cache.emplace(q, std::move(table)).first->second;
      } catch (const std::exception&) {
        // fall through and rebuild
      }
    }
  }
  auto table = build(q);
  if (!path.empty()) {
    std::ofstream out(path + ".tmp");
    if (out) {
      out << table.to_json().dump();
      out.close();
      std::rename((path + ".tmp").c_str(), path.c_str());
    }
  }
  return cache.emplace(q, std::move(table)).first->second;
}

}  // namespace charfluct
