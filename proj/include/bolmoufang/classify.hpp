#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bolmoufang/evaluator.hpp"
#include "bolmoufang/loop.hpp"
#include "bolmoufang/term.hpp"

namespace bolmoufang {

// ---------------------------------------------------------------------------
// Expected classification data

/// Variety defined by each of the 60 identities (never 3PA).
Variety classify_identity(IdentityName name);
std::vector<IdentityName> class_members(Variety v);

struct InclusionEdge {
    Variety sub;
    Variety super;
};

/// The 19 covering inclusions among the 15 varieties.
const std::array<InclusionEdge, 19>& inclusion_edges();
/// Reflexive-transitive closure of inclusion_edges().
bool included(Variety sub, Variety super);

/// Row/column order of the separation table (3PA does not take part).
inline constexpr std::array<Variety, 14> kSeparationOrder{
    Variety::GR, Variety::EL, Variety::ML, Variety::CL, Variety::LB, Variety::RB, Variety::LC,
    Variety::RC, Variety::LA, Variety::FL, Variety::RA, Variety::LN, Variety::MN, Variety::RN};

/// Entry (row, col) of the separation table: empty when row ⊆ col,
/// otherwise distinguishing example `example` (1..8), taken in the
/// opposite loop when `opposite` is set, lies in row \ col.
struct SeparationCell {
    Variety row;
    Variety col;
    int example = 0;
    bool opposite = false;

    bool empty() const { return example == 0; }
    std::string str() const;  // "", "2", "2'"
};

SeparationCell separation_cell(Variety row, Variety col);

// ---------------------------------------------------------------------------
// Loop pools

struct ProfiledLoop {
    std::string id;  // "E6_5", "E6_5'" (opposite), "n5#17" (catalog)
    FiniteLoop loop;
    Profile profile;
};

/// The ten example loops followed by their opposites.
const std::vector<ProfiledLoop>& paper_pool();

struct CatalogOptions {
    int max_order = 6;
    unsigned threads = 1;
    /// Directory for the on-disk profile cache; no caching when unset.
    std::optional<std::filesystem::path> cache_dir;
};

/// Every reduced loop of order 1..max_order with its profile.
std::vector<ProfiledLoop> profile_catalog(const CatalogOptions& options);
std::filesystem::path catalog_cache_file(const std::filesystem::path& dir, int max_order);

// ---------------------------------------------------------------------------
// Reports

enum class FailureKind { ClassificationMismatch, InclusionViolated, CellMismatch, ClaimFailed };

std::string_view to_string(FailureKind kind);

struct Certificate {
    std::string subject;   // what is asserted, e.g. "A12 ~ A23" or "LC <= MN"
    std::string status;    // how: "exhausted<=6", "separated", "example", ...
    std::string evidence;  // which loops or edges back it
    std::optional<FailureKind> failure;
    std::string detail;    // offending loop table on failure
};

struct Report {
    std::string title;
    std::vector<Certificate> certificates;

    std::size_t failures() const;
    bool ok() const { return failures() == 0; }
};

void write_text(std::ostream& out, const Report& report);
/// One JSON object per line per certificate, then a summary record.
void write_records(std::ostream& out, const Report& report);

// ---------------------------------------------------------------------------
// Verification

/// Every caption claim of the ten example loops.
Report verify_examples();

/// Same-class identities agree on the whole catalog; different-class
/// identities are separated by some loop (examples, their opposites, the
/// catalog, or a search one order beyond it).
Report verify_table3(const CatalogOptions& options);

/// Edges hold on the catalog and the example pool; every non-inclusion has
/// a counterexample; the empirical Hasse diagram equals the edge list.
Report verify_figure1(const CatalogOptions& options);

/// Every nonempty cell's example lies in row \ col, every empty cell is
/// an inclusion of the closure.
Report verify_table2();

}  // namespace bolmoufang
