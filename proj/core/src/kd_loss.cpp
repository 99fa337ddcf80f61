#include "amrkit/kd_loss.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "amrkit/errors.hpp"

namespace amrkit::kd {

namespace {

void check_vocab(const SeqModel& a, const SeqModel& b) {
  if (!(a.vocabulary() == b.vocabulary())) {
    throw std::invalid_argument("student and teacher vocabularies differ");
  }
}

void check_enumerable(std::size_t vocab, std::size_t max_len) {
  if (max_len == 0) throw std::invalid_argument("max_len must be >= 1");
  const double space = std::pow(static_cast<double>(vocab), static_cast<double>(max_len));
  if (space > kEnumerationLimit) {
    throw TooLarge("|V|^max_len = " + std::to_string(space) + " exceeds the enumeration limit");
  }
}

}  // namespace

double mle_loss(const SeqModel& model, std::span<const std::string> x,
                std::span<const TokenId> y) {
  const Vocabulary& vocab = model.vocabulary();
  if (y.empty() || y.back() != vocab.eos()) throw std::invalid_argument("target must end with EOS");
  double loss = 0.0;
  for (std::size_t t = 0; t < y.size(); ++t) {
    const auto dist = model.next_dist(y.first(t), x);
    const double p = dist.at(y[t]);
    if (!(p > 0.0)) {
      throw ZeroProbability("target token '" + vocab.token(y[t]) + "' at step " +
                            std::to_string(t) + " has probability 0");
    }
    loss -= std::log(p);
  }
  return loss;
}

double kl_divergence(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw std::invalid_argument("distribution sizes differ");
  double kl = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    if (q[i] <= 0.0) {
      throw SupportMismatch("teacher assigns 0 to token " + std::to_string(i) +
                            " where the student assigns " + std::to_string(p[i]));
    }
    kl += p[i] * std::log(p[i] / q[i]);
  }
  // Rounding can leave a tiny negative total for equal distributions.
  return std::max(kl, 0.0);
}

double token_kd_loss(const SeqModel& student, const SeqModel& teacher,
                     std::span<const std::string> x, std::span<const std::string> x_star,
                     std::span<const TokenId> y) {
  check_vocab(student, teacher);
  double loss = 0.0;
  for (std::size_t t = 0; t < y.size(); ++t) {
    const auto p = student.next_dist(y.first(t), x);
    const auto q = teacher.next_dist(y.first(t), x_star);
    loss += kl_divergence(p, q);
  }
  return loss;
}

bool ranks_before(double lp_a, const std::vector<TokenId>& a, double lp_b,
                  const std::vector<TokenId>& b) {
  if (lp_a != lp_b) return lp_a > lp_b;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void enumerate_outcomes(const SeqModel& model, std::span<const std::string> x,
                        std::size_t max_len,
                        const std::function<void(const std::vector<TokenId>&, double)>& visit) {
  const Vocabulary& vocab = model.vocabulary();
  check_enumerable(vocab.size(), max_len);
  const TokenId eos = vocab.eos();
  std::vector<TokenId> prefix;
  std::function<void(double)> walk = [&](double lp) {
    const auto dist = model.next_dist(prefix, x);
    for (TokenId v = 0; v < dist.size(); ++v) {
      if (!(dist[v] > 0.0)) continue;
      const double next = lp + std::log(dist[v]);
      prefix.push_back(v);
      if (v == eos) {
        visit(prefix, next);
      } else if (prefix.size() == max_len) {
        prefix.push_back(eos);
        visit(prefix, next);
        prefix.pop_back();
      } else {
        walk(next);
      }
      prefix.pop_back();
    }
  };
  walk(0.0);
}

std::vector<TokenId> exact_mode(const SeqModel& model, std::span<const std::string> x,
                                std::size_t max_len) {
  std::vector<TokenId> best;
  double best_lp = -std::numeric_limits<double>::infinity();
  enumerate_outcomes(model, x, max_len, [&](const std::vector<TokenId>& seq, double lp) {
    if (best.empty() || ranks_before(lp, seq, best_lp, best)) {
      best = seq;
      best_lp = lp;
    }
  });
  return best;
}

double exact_seq_kl(const SeqModel& student, const SeqModel& teacher,
                    std::span<const std::string> x, std::span<const std::string> x_star,
                    std::size_t max_len) {
  check_vocab(student, teacher);
  double kl = 0.0;
  enumerate_outcomes(student, x, max_len, [&](const std::vector<TokenId>& seq, double lp_s) {
    // Teacher log probability of the same outcome; the appended EOS of a
    // truncated outcome is not a model step.
    const bool truncated = seq.size() == max_len + 1;
    const std::size_t steps = truncated ? max_len : seq.size();
    double lp_t = 0.0;
    for (std::size_t t = 0; t < steps; ++t) {
      const auto q = teacher.next_dist(std::span<const TokenId>(seq).first(t), x_star);
      if (!(q[seq[t]] > 0.0)) {
        throw SupportMismatch("teacher assigns probability 0 to a student outcome");
      }
      lp_t += std::log(q[seq[t]]);
    }
    kl += std::exp(lp_s) * (lp_s - lp_t);
  });
  return std::max(kl, 0.0);
}

}  // namespace amrkit::kd
