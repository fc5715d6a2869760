#include "ramsey/arrowing.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/formulas.hpp"

#include <chrono>
#include <stdexcept>

namespace ramsey {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since)
      .count();
}

std::optional<int> burr_start(const Target &red, const Target &blue) {
  try {
    return burr_bound(red.spec(), blue.spec());
  } catch (const HypothesisError &) {
    return std::nullopt;
  } catch (const LimitError &) {
    return std::nullopt;
  }
}

} // namespace

RamseyResult ramsey_number(const Target &red, const Target &blue,
                           const RamseyOptions &options) {
  const auto started = Clock::now();
  RamseyResult result;
  if (options.max_r < 1 || options.max_r > kMaxOrder)
    throw LimitError("ramsey_number: max_r must be in 1.." +
                     std::to_string(kMaxOrder));
  if (auto known = known_ramsey(red.spec(), blue.spec())) {
    result.catalog = known->value;
    result.catalog_source = known->source;
  }

  int r = 1;
  if (options.start_from_burr) {
    if (auto b = burr_start(red, blue); b && *b <= options.max_r) {
      r = *b;
      result.burr_start = true;
    }
  }
  result.start = r;

  const auto done = [&](SearchStatus status, int value) {
    result.status = status;
    result.value = value;
    result.runtime_ms = elapsed_ms(started);
    return result;
  };

  for (; r <= options.max_r; ++r) {
    const ArrowingResult a =
        arrows(Graph::complete(r), red, blue, options.search);
    result.nodes += a.stats.nodes;
    if (a.verdict == Verdict::Indeterminate)
      return done(SearchStatus::Indeterminate, 0);
    if (a.verdict == Verdict::Arrows)
      break;
  }
  if (r > options.max_r)
    return done(SearchStatus::NotFoundWithinBound, 0);

  // A Burr start skips the smaller hosts; confirm the one just below.
  if (result.burr_start && r == result.start && r > 1) {
    const ArrowingResult below =
        arrows(Graph::complete(r - 1), red, blue, options.search);
    result.nodes += below.stats.nodes;
    if (below.verdict == Verdict::Indeterminate)
      return done(SearchStatus::Indeterminate, 0);
    if (below.verdict == Verdict::Arrows)
      throw VerificationError("ramsey_number: K_" + std::to_string(r - 1) +
                              " arrows below the Burr bound " +
                              std::to_string(r));
  }
  return done(SearchStatus::Found, r);
}

std::string to_string(DeletionFamily f) {
  switch (f) {
  case DeletionFamily::Path:
    return "path";
  case DeletionFamily::Matching:
    return "matching";
  case DeletionFamily::Clique:
    return "clique";
  }
  return "?";
}

DeletionFamily parse_family(const std::string &name) {
  if (name == "path")
    return DeletionFamily::Path;
  if (name == "matching")
    return DeletionFamily::Matching;
  if (name == "clique")
    return DeletionFamily::Clique;
  throw std::invalid_argument("unknown deletion family '" + name +
                              "' (expected path, matching or clique)");
}

namespace {

GraphSpec family_member(DeletionFamily family, int index) {
  switch (family) {
  case DeletionFamily::Path:
    return GraphSpec::path(index);
  case DeletionFamily::Matching:
    return GraphSpec::matching(index);
  case DeletionFamily::Clique:
    return GraphSpec::complete(index);
  }
  throw std::invalid_argument("bad deletion family");
}

int first_index(DeletionFamily family) {
  return family == DeletionFamily::Matching ? 1 : 2;
}

int last_index(DeletionFamily family, int r) {
  return family == DeletionFamily::Matching ? r / 2 : r;
}

} // namespace

Graph deletion_host(int r, DeletionFamily family, int index) {
  return realize(
      GraphSpec::minus(GraphSpec::complete(r), family_member(family, index)));
}

CriticalResult critical_number(const Target &red, const Target &blue,
                               DeletionFamily family, int r,
                               const SearchOptions &options) {
  const auto started = Clock::now();
  CriticalResult result;
  result.family = family;
  result.r = r;
  switch (family) {
  case DeletionFamily::Path:
    result.convention = "path index = vertices of the deleted P_n";
    break;
  case DeletionFamily::Matching:
    result.convention = "matching index = edges of the deleted qK_2";
    break;
  case DeletionFamily::Clique:
    result.convention = "clique index = vertices of the deleted K_n";
    break;
  }

  for (int i = first_index(family); i <= last_index(family, r); ++i) {
    const ArrowingResult a =
        arrows(deletion_host(r, family, i), red, blue, options);
    result.nodes += a.stats.nodes;
    result.scan.emplace_back(i, a.verdict);
    if (a.verdict == Verdict::Indeterminate) {
      result.status = SearchStatus::Indeterminate;
      result.runtime_ms = elapsed_ms(started);
      return result;
    }
    if (a.verdict == Verdict::Counterexample)
      break;
    result.value = i;
  }
  result.status = SearchStatus::Found;
  result.runtime_ms = elapsed_ms(started);
  return result;
}

} // namespace ramsey
