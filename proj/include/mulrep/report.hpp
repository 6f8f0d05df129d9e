#ifndef MULREP_REPORT_HPP
#define MULREP_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mulrep/catalog.hpp"
#include "mulrep/ramsey.hpp"
#include "mulrep/repcount.hpp"
#include "mulrep/set_partitions.hpp"
#include "mulrep/squarefree_map.hpp"
#include "mulrep/witness_search.hpp"

namespace mulrep {

enum class Format { text, json, csv };

std::optional<Format> parse_format(const std::string& text);

std::string render_witness(const RepWitness& w, Format f);

/// json: {"lo":..,"hi":..,"min_count":..,"argmin":..,"max_count":..,"argmax":..}
std::string render_window(const WindowStats& s, Format f);

/// csv header "n,count".
std::string render_scan(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& rows, Format f);

/// csv header "n,closed_form,brute_force,match".
std::string render_verify(const VerifyReport& r, Format f);

std::string render_mh_table(unsigned h, const std::vector<MhRow>& rows, Format f);

std::string render_search(const SearchOutcome& o, Format f);

std::string render_partitions(std::uint64_t q, const std::vector<std::vector<PrimeSet>>& tuples, Format f);

std::string render_correspondence(std::uint64_t q, const PrimeSet& primes, const CorrespondenceResult& r, Format f);

std::string render_subset(const std::optional<std::vector<std::uint64_t>>& subset, Format f);

std::string render_chain(const std::optional<HomogeneousChain>& chain, Format f);

}  // namespace mulrep

#endif  // MULREP_REPORT_HPP
