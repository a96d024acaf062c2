#include "erpdec/labeling.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace erpdec {

std::vector<ExplicitRating> aggregate_ratings(
    const std::vector<ConfirmationSelection>& selections,
    const std::vector<std::string>& participant_ids,
    const std::vector<std::string>& stimulus_ids) {
  std::unordered_set<std::string> stimuli(stimulus_ids.begin(),
                                          stimulus_ids.end());
  // (participant, stimulus) -> blocks with at least one selection
  std::map<std::pair<std::string, std::string>, std::set<int>> blocks;
  for (const auto& sel : selections) {
    if (stimuli.find(sel.stimulus_id) == stimuli.end()) {
      throw std::invalid_argument("selection references unknown stimulus: " +
                                  sel.stimulus_id);
    }
    blocks[{sel.participant_id, sel.stimulus_id}].insert(sel.block);
  }
  std::vector<ExplicitRating> out;
  out.reserve(participant_ids.size() * stimulus_ids.size());
  for (const auto& p : participant_ids) {
    for (const auto& s : stimulus_ids) {
      ExplicitRating r;
      r.participant_id = p;
      r.stimulus_id = s;
      const auto it = blocks.find({p, s});
      r.count = it == blocks.end() ? 0 : static_cast<int>(it->second.size());
      if (r.count > 3) r.count = 3;
      out.push_back(std::move(r));
    }
  }
  return out;
}

Tertile tertile_of_position(int position, int n) {
  const int third = n / 3;
  const int rem = n % 3;
  const int high_n = third;
  const int med_n = third + (rem >= 1 ? 1 : 0);
  if (position < high_n) return Tertile::High;
  if (position < high_n + med_n) return Tertile::Medium;
  return Tertile::Low;
}

GroupRanking group_ranking(const std::vector<ExplicitRating>& ratings) {
  if (ratings.empty()) {
    throw std::invalid_argument("group ranking needs at least one rating");
  }
  std::map<std::string, long long> scores;  // ordered: stable id tie-break
  for (const auto& r : ratings) scores[r.stimulus_id] += r.count;

  GroupRanking ranking;
  ranking.entries.reserve(scores.size());
  for (const auto& [id, score] : scores) {
    RankedStimulus e;
    e.stimulus_id = id;
    e.score = score;
    ranking.entries.push_back(std::move(e));
  }
  std::stable_sort(ranking.entries.begin(), ranking.entries.end(),
                   [](const RankedStimulus& a, const RankedStimulus& b) {
                     return a.score > b.score;
                   });
  const int n = static_cast<int>(ranking.entries.size());
  int rank = 0;
  long long prev_score = 0;
  for (int i = 0; i < n; ++i) {
    if (i == 0 || ranking.entries[i].score != prev_score) ++rank;
    prev_score = ranking.entries[i].score;
    ranking.entries[i].rank = rank;
    ranking.entries[i].tertile = tertile_of_position(i, n);
  }
  return ranking;
}

namespace {

std::unordered_map<std::string, int> ratings_for_participant(
    const std::vector<ExplicitRating>& ratings, const std::string& participant) {
  std::unordered_map<std::string, int> map;
  for (const auto& r : ratings) {
    if (r.participant_id == participant) map[r.stimulus_id] = r.count;
  }
  return map;
}

}  // namespace

LabeledEpochSet explicit_labels(const EpochSet& set,
                                const std::vector<ExplicitRating>& ratings) {
  LabeledEpochSet out;
  out.domain = LabelDomain::Rating;
  out.set.sampling_rate_hz = set.sampling_rate_hz;
  out.set.channel_labels = set.channel_labels;
  std::unordered_map<std::string, std::unordered_map<std::string, int>> by_participant;
  for (const auto& r : ratings) {
    by_participant[r.participant_id][r.stimulus_id] = r.count;
  }
  for (const auto& e : set.epochs) {
    if (e.rejected) continue;
    const auto pit = by_participant.find(e.participant_id);
    if (pit == by_participant.end()) {
      throw std::invalid_argument("no ratings for participant " + e.participant_id);
    }
    const auto sit = pit->second.find(e.stimulus_id);
    if (sit == pit->second.end()) {
      throw std::invalid_argument("missing rating for stimulus " + e.stimulus_id);
    }
    Epoch labeled = e;
    labeled.label = static_cast<std::int8_t>(sit->second);
    out.set.epochs.push_back(std::move(labeled));
  }
  return out;
}

std::optional<LabeledEpochSet> contradiction_subset(
    const EpochSet& set, const std::vector<ExplicitRating>& ratings,
    const GroupRanking& ranking) {
  std::unordered_map<std::string, Tertile> tertiles;
  for (const auto& e : ranking.entries) tertiles[e.stimulus_id] = e.tertile;

  std::unordered_map<std::string, std::unordered_map<std::string, int>> by_participant;
  for (const auto& r : ratings) {
    by_participant[r.participant_id][r.stimulus_id] = r.count;
  }

  LabeledEpochSet out;
  out.domain = LabelDomain::GroupTertile;
  out.set.sampling_rate_hz = set.sampling_rate_hz;
  out.set.channel_labels = set.channel_labels;
  bool has_low = false;
  bool has_high = false;
  for (const auto& e : set.epochs) {
    if (e.rejected) continue;
    const auto pit = by_participant.find(e.participant_id);
    if (pit == by_participant.end()) {
      throw std::invalid_argument("no ratings for participant " + e.participant_id);
    }
    const auto sit = pit->second.find(e.stimulus_id);
    if (sit == pit->second.end()) {
      throw std::invalid_argument("missing rating for stimulus " + e.stimulus_id);
    }
    if (sit->second != 0) continue;
    const auto tit = tertiles.find(e.stimulus_id);
    if (tit == tertiles.end()) {
      throw std::invalid_argument("stimulus missing from ranking: " + e.stimulus_id);
    }
    if (tit->second == Tertile::Medium) continue;
    Epoch labeled = e;
    labeled.label =
        static_cast<std::int8_t>(tit->second == Tertile::High ? 1 : 0);
    has_low = has_low || tit->second == Tertile::Low;
    has_high = has_high || tit->second == Tertile::High;
    out.set.epochs.push_back(std::move(labeled));
  }
  if (!has_low || !has_high) return std::nullopt;
  return out;
}

}  // namespace erpdec
