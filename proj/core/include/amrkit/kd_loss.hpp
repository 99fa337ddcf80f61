#pragma once

#include <functional>
#include <span>
#include <vector>

#include "amrkit/seq_model.hpp"

namespace amrkit::kd {

// Negative log-likelihood -sum_t log p(y_t | y_<t, x). `y` must end with
// EOS. Throws ZeroProbability if any target step has probability 0.
double mle_loss(const SeqModel& model, std::span<const std::string> x,
                std::span<const TokenId> y);

// KL(p || q) = sum_i p_i log(p_i / q_i); terms with p_i = 0 contribute 0.
// Throws SupportMismatch where q_i = 0 < p_i.
double kl_divergence(std::span<const double> p, std::span<const double> q);

// Token-level distillation loss, teacher-forced on `y`:
//   sum_t KL( student(. | y_<t, x) || teacher(. | y_<t, x_star) ).
double token_kd_loss(const SeqModel& student, const SeqModel& teacher,
                     std::span<const std::string> x, std::span<const std::string> x_star,
                     std::span<const TokenId> y);

// Outcome space shared by beam search and the enumeration oracles: at most
// `max_len` model steps. A sequence ends at the first EOS; after `max_len`
// non-EOS steps, EOS is appended without a model step (probability 1). The
// outcome probabilities therefore sum to 1.
inline constexpr double kEnumerationLimit = 1e6;

// Calls visit(tokens, log_prob) for every outcome with non-zero
// probability, in depth-first vocabulary order. Throws TooLarge when
// |V|^max_len exceeds kEnumerationLimit.
void enumerate_outcomes(const SeqModel& model, std::span<const std::string> x,
                        std::size_t max_len,
                        const std::function<void(const std::vector<TokenId>&, double)>& visit);

// Most probable outcome by exhaustive enumeration. Ties go to the
// lexicographically smaller id sequence (vocabulary order), then the
// shorter one.
std::vector<TokenId> exact_mode(const SeqModel& model, std::span<const std::string> x,
                                std::size_t max_len);

// KL between the full outcome distributions student(. | x) and
// teacher(. | x_star), by enumeration over the student's support.
double exact_seq_kl(const SeqModel& student, const SeqModel& teacher,
                    std::span<const std::string> x, std::span<const std::string> x_star,
                    std::size_t max_len);

// Strict weak order used for ranking hypotheses everywhere: higher log
// probability first, then vocabulary order, then shorter first.
bool ranks_before(double lp_a, const std::vector<TokenId>& a, double lp_b,
                  const std::vector<TokenId>& b);

}  // namespace amrkit::kd
