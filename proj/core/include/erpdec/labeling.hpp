#pragma once

#include <optional>
#include <string>
#include <vector>

#include "erpdec/types.hpp"

namespace erpdec {

/// One confirmation-task selection: participant picked this stimulus as
/// attractive somewhere inside the given block.
struct ConfirmationSelection {
  std::string participant_id;
  std::string stimulus_id;
  int block = 0;  // 0-based
};

/// Collapses selections to 0..3 ratings: a stimulus counts at most once per
/// block. Emits a rating for every (participant, stimulus) pair, zeros
/// included. Throws on selections referencing unknown stimuli.
std::vector<ExplicitRating> aggregate_ratings(
    const std::vector<ConfirmationSelection>& selections,
    const std::vector<std::string>& participant_ids,
    const std::vector<std::string>& stimulus_ids);

/// Rank-ordered sum of everyone's ratings with dense ranks and tertile
/// labels; ties ordered by stimulus id. Throws on empty input.
GroupRanking group_ranking(const std::vector<ExplicitRating>& ratings);

/// Tertile of the item at `position` (0 = best) among `n` ranked items.
/// High and Low take floor(n/3); the remainder goes to Medium, then Low,
/// keeping tertile sizes within 1 of each other.
Tertile tertile_of_position(int position, int n);

/// Labels every non-rejected epoch with the participant's rating for its
/// stimulus; rejected epochs are dropped. Throws when a rating is missing.
LabeledEpochSet explicit_labels(const EpochSet& set,
                                const std::vector<ExplicitRating>& ratings);

/// Rating-0 epochs of stimuli in the High or Low group tertile, labeled by
/// tertile (Low=0, High=1). Returns nullopt (NotApplicable) when either
/// class would be empty.
std::optional<LabeledEpochSet> contradiction_subset(
    const EpochSet& set, const std::vector<ExplicitRating>& ratings,
    const GroupRanking& ranking);

}  // namespace erpdec
