#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "permprim/group.hpp"
#include "permprim/partition.hpp"
#include "permprim/perm.hpp"
#include "permprim/theorem.hpp"

namespace permprim {

inline void to_json(nlohmann::json& j, const MPartitionCertificate& c) {
  j = nlohmann::json{{"m", c.m}, {"k", c.k}, {"groups", c.groups}};
}

inline void from_json(const nlohmann::json& j, MPartitionCertificate& c) {
  j.at("m").get_to(c.m);
  j.at("k").get_to(c.k);
  j.at("groups").get_to(c.groups);
}

inline void to_json(nlohmann::json& j, const SpecialMPartitionCertificate& c) {
  j = nlohmann::json{{"m", c.m},
                     {"k", c.k},
                     {"largest_part_index", c.largest_part_index},
                     {"groups", c.groups}};
}

inline void from_json(const nlohmann::json& j, SpecialMPartitionCertificate& c) {
  j.at("m").get_to(c.m);
  j.at("k").get_to(c.k);
  j.at("largest_part_index").get_to(c.largest_part_index);
  j.at("groups").get_to(c.groups);
}

inline void to_json(nlohmann::json& j, const BlockSystem& s) { j = s.blocks; }

inline void from_json(const nlohmann::json& j, BlockSystem& s) { j.get_to(s.blocks); }

inline void to_json(nlohmann::json& j, const LemmaWitness& w) {
  j = nlohmann::json{{"s_index", w.s_index},       {"t_index", w.t_index},
                     {"s_cycle", w.s_cycle.elements}, {"t_cycle", w.t_cycle.elements},
                     {"exponent", w.exponent},     {"a_s", w.a_s},
                     {"a_t", w.a_t}};
}

inline VerdictTag verdict_from_string(const std::string& text) {
  for (VerdictTag tag :
       {VerdictTag::QualifiesL2, VerdictTag::QualifiesL3Plus, VerdictTag::NotCoveredSingleCycle,
        VerdictTag::FailsDistinctOrCoprime, VerdictTag::FailsMPartition,
        VerdictTag::FailsSpecialMPartition})
    if (text == to_string(tag)) return tag;
  throw std::invalid_argument("unknown verdict tag: " + text);
}

// Everything cmd_analyze reports.  The verdict string is the classify_generator
// tag; certificates come from the full partition analysis, so a failing
// distinctness check leaves them empty while a coprimality failure does not.
struct AnalysisReport {
  std::string input;
  int degree = 0;
  std::vector<int> partition;
  bool distinct = false;
  bool relatively_prime = false;
  bool strict_defs = false;
  std::string verdict;
  std::optional<MPartitionCertificate> m_certificate;
  std::optional<SpecialMPartitionCertificate> special_certificate;
  std::vector<std::string> explanation;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

inline void to_json(nlohmann::json& j, const AnalysisReport& r) {
  nlohmann::json certificates;
  certificates["m_partition"] = r.m_certificate ? nlohmann::json(*r.m_certificate)
                                                : nlohmann::json(nullptr);
  certificates["special_m_partition"] =
      r.special_certificate ? nlohmann::json(*r.special_certificate) : nlohmann::json(nullptr);
  j = nlohmann::json{{"input", r.input},
                     {"degree", r.degree},
                     {"partition", r.partition},
                     {"distinct", r.distinct},
                     {"relatively_prime", r.relatively_prime},
                     {"strict_defs", r.strict_defs},
                     {"verdict", r.verdict},
                     {"certificates", certificates},
                     {"explanation", r.explanation}};
}

inline void from_json(const nlohmann::json& j, AnalysisReport& r) {
  j.at("input").get_to(r.input);
  j.at("degree").get_to(r.degree);
  j.at("partition").get_to(r.partition);
  j.at("distinct").get_to(r.distinct);
  j.at("relatively_prime").get_to(r.relatively_prime);
  j.at("strict_defs").get_to(r.strict_defs);
  j.at("verdict").get_to(r.verdict);
  const nlohmann::json& certificates = j.at("certificates");
  if (certificates.at("m_partition").is_null())
    r.m_certificate.reset();
  else
    r.m_certificate = certificates.at("m_partition").get<MPartitionCertificate>();
  if (certificates.at("special_m_partition").is_null())
    r.special_certificate.reset();
  else
    r.special_certificate =
        certificates.at("special_m_partition").get<SpecialMPartitionCertificate>();
  j.at("explanation").get_to(r.explanation);
}

namespace detail {

inline std::string join_ints(const std::vector<int>& values, const char* separator) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += separator;
    out += std::to_string(values[i]);
  }
  return out;
}

inline std::string group_values_text(const std::vector<int>& parts,
                                     const std::vector<std::vector<int>>& groups) {
  std::string out;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (g > 0) out += " + ";
    out += '(';
    for (std::size_t i = 0; i < groups[g].size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(parts[static_cast<std::size_t>(groups[g][i])]);
    }
    out += ')';
  }
  return out;
}

}  // namespace detail

inline AnalysisReport analyze_permutation(const Permutation& alpha, bool strict_defs = false) {
  AnalysisReport r;
  r.input = print_permutation(alpha);
  r.degree = alpha.degree();
  r.strict_defs = strict_defs;

  const GeneratorVerdict verdict = classify_generator(alpha, strict_defs);
  const PartitionOfD& partition = verdict.partition;
  r.partition = partition.parts();
  r.verdict = to_string(verdict.tag);

  const PartitionClass analysis = classify_parts(partition, strict_defs);
  r.distinct = analysis.distinct;
  r.relatively_prime = analysis.relatively_prime;
  r.m_certificate = analysis.m_partition;
  r.special_certificate = analysis.special_m_partition;

  r.explanation.push_back("cycle type partition of " + std::to_string(r.degree) + ": [" +
                          detail::join_ints(r.partition, ", ") + "]");
  r.explanation.push_back(std::string("parts distinct: ") + (r.distinct ? "yes" : "no"));
  r.explanation.push_back(std::string("parts pairwise coprime: ") +
                          (r.relatively_prime ? "yes" : "no"));
  if (!r.distinct) {
    r.explanation.push_back("m-partition: not evaluated (needs distinct parts)");
    r.explanation.push_back("special m-partition: not evaluated (needs distinct parts)");
  } else {
    if (r.m_certificate)
      r.explanation.push_back(
          "m-partition: yes, m=" + std::to_string(r.m_certificate->m) + " with " +
          std::to_string(r.m_certificate->k) + " groups " +
          detail::group_values_text(r.partition, r.m_certificate->groups));
    else
      r.explanation.push_back("m-partition: none");
    if (r.special_certificate)
      r.explanation.push_back(
          "special m-partition: yes, m=" + std::to_string(r.special_certificate->m) +
          " divides the largest part " +
          std::to_string(
              r.partition[static_cast<std::size_t>(r.special_certificate->largest_part_index)]) +
          ", remaining parts group as " +
          detail::group_values_text(r.partition, r.special_certificate->groups));
    else
      r.explanation.push_back(std::string("special m-partition: none") +
                              (strict_defs ? " (strict k-range)" : ""));
  }

  switch (verdict.tag) {
    case VerdictTag::QualifiesL2:
    case VerdictTag::QualifiesL3Plus:
      r.explanation.push_back(
          "verdict: " + r.verdict +
          " -- every transitive group containing this permutation is primitive");
      break;
    case VerdictTag::NotCoveredSingleCycle:
      r.explanation.push_back("verdict: " + r.verdict +
                              " -- a single cycle is outside the criterion");
      break;
    case VerdictTag::FailsDistinctOrCoprime:
      r.explanation.push_back("verdict: " + r.verdict +
                              " -- the criterion needs distinct, pairwise coprime cycle lengths");
      break;
    case VerdictTag::FailsMPartition:
      r.explanation.push_back("verdict: " + r.verdict +
                              " -- an m-partition exists, so the criterion does not apply");
      break;
    case VerdictTag::FailsSpecialMPartition:
      r.explanation.push_back(
          "verdict: " + r.verdict +
          " -- a special m-partition exists, so the criterion does not apply");
      break;
  }
  return r;
}

}  // namespace permprim
