#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "csalign/types.hpp"

namespace csalign::ingest {

/// One annotated record (image, audio clip, ...) and the set of concept
/// labels present in it. Labels are stored sorted and unique.
struct LabelRecord {
  std::string record_id;
  std::vector<std::string> labels;
};

enum class AnnotationFormat { generic_csv, openimages_csv, audioset_csv };

struct AnnotationOptions {
  /// OpenImages only: drop rows whose Confidence falls below this value.
  /// Negative disables the filter (annotations without the column pass).
  double confidence_threshold = -1.0;
};

/// Parses an annotation CSV into records, grouped by record id in first
/// appearance order. Duplicate (record, label) rows collapse to one label.
std::vector<LabelRecord> load_annotations(const std::filesystem::path& path,
                                          AnnotationFormat format,
                                          const AnnotationOptions& options = {});

/// Sparse symmetric co-occurrence matrix: entries stored once for i < j,
/// all weights positive, vocab labels unique.
struct CoEntry {
  int i = 0;
  int j = 0;
  double weight = 0.0;
};

struct CooccurrenceMatrix {
  std::vector<std::string> vocab;
  std::vector<CoEntry> entries;  // sorted by (i, j), i < j
};

/// Every unordered label pair within a record increments X by exactly 1.
/// Records with fewer than two labels contribute nothing; throws if no
/// record has two or more labels.
CooccurrenceMatrix build_cooccurrence_from_records(std::span<const LabelRecord> records);

/// Sliding-window builder: each co-occurring position pair within
/// `window` adds 1/d, d the position distance. Pairs of identical tokens
/// are skipped. Vocab covers only tokens that appear in a kept pair.
CooccurrenceMatrix build_cooccurrence_from_tokens(std::span<const std::string> tokens,
                                                  int window);

/// Triplet file `i<TAB>j<TAB>weight` (i < j, 0-based) plus a sidecar vocab
/// file with one label per line.
void save_cooccurrence(const CooccurrenceMatrix& matrix,
                       const std::filesystem::path& triplet_path,
                       const std::filesystem::path& vocab_path);
CooccurrenceMatrix load_cooccurrence(const std::filesystem::path& triplet_path,
                                     const std::filesystem::path& vocab_path);

/// Embedding text format: one concept per line, `label v1 v2 ... vd`.
ConceptualSystem load_embedding_text(const std::filesystem::path& path);
void save_embedding_text(const ConceptualSystem& system, const std::filesystem::path& path);

/// Age-of-acquisition ratings, keyed by lowercased single word.
struct AoATable {
  std::map<std::string, double> entries;

  /// Lowercases the query before lookup; returns nullptr when unrated.
  const double* find(const std::string& word) const;
};

/// CSV with columns `word,rating`; ratings must parse as positive reals.
AoATable load_aoa(const std::filesystem::path& path);

/// Keeps labels containing no whitespace. Throws if nothing survives.
std::vector<std::string> single_word_filter(std::span<const std::string> labels);

/// Concept intersection of >= 2 systems: sorted common labels plus, per
/// system, the row index of each intersection concept.
struct Intersection {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> rows;  // rows[s][k] = row of labels[k] in system s
};

Intersection intersect_systems(std::span<const ConceptualSystem> systems);

/// Restricts every system to the intersection, all in intersection order.
std::vector<ConceptualSystem> apply_intersection(std::span<const ConceptualSystem> systems,
                                                 const Intersection& intersection);

}  // namespace csalign::ingest
