#include "csalign/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "csalign/io_util.hpp"

namespace csalign::ingest {

namespace {

std::string lowercase(const std::string& text) {
  std::string out = text;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

int require_column(const CsvTable& table, const std::string& name,
                   const std::filesystem::path& path) {
  int index = table.column(name);
  if (index < 0) {
    throw std::runtime_error("missing column '" + name + "' in " + path.string());
  }
  return index;
}

std::string field_at(const std::vector<std::string>& row, int index) {
  if (index < 0 || static_cast<std::size_t>(index) >= row.size()) return "";
  return trim(row[static_cast<std::size_t>(index)]);
}

struct RawPair {
  std::string record_id;
  std::string label;
};

std::vector<LabelRecord> group_pairs(std::vector<RawPair>&& pairs) {
  std::vector<LabelRecord> records;
  std::unordered_map<std::string, std::size_t> index;
  for (RawPair& pair : pairs) {
    if (pair.label.empty()) continue;
    auto [it, inserted] = index.try_emplace(pair.record_id, records.size());
    if (inserted) {
      records.push_back({std::move(pair.record_id), {}});
    }
    records[it->second].labels.push_back(std::move(pair.label));
  }
  for (LabelRecord& record : records) {
    std::sort(record.labels.begin(), record.labels.end());
    record.labels.erase(std::unique(record.labels.begin(), record.labels.end()),
                        record.labels.end());
  }
  return records;
}

// Accumulates symmetric weights keyed by (i, j) with i < j.
class PairAccumulator {
 public:
  void add(int a, int b, double weight) {
    if (a == b) return;
    if (a > b) std::swap(a, b);
    weights_[(static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b)] += weight;
  }

  std::vector<CoEntry> sorted_entries() const {
    std::vector<CoEntry> entries;
    entries.reserve(weights_.size());
    for (const auto& [key, weight] : weights_) {
      entries.push_back({static_cast<int>(key >> 32), static_cast<int>(key & 0xffffffffu), weight});
    }
    std::sort(entries.begin(), entries.end(), [](const CoEntry& a, const CoEntry& b) {
      return a.i != b.i ? a.i < b.i : a.j < b.j;
    });
    return entries;
  }

  bool empty() const { return weights_.empty(); }

 private:
  std::unordered_map<std::uint64_t, double> weights_;
};

}  // namespace

std::vector<LabelRecord> load_annotations(const std::filesystem::path& path,
                                          AnnotationFormat format,
                                          const AnnotationOptions& options) {
  std::vector<RawPair> pairs;
  switch (format) {
    case AnnotationFormat::generic_csv: {
      const CsvTable table = read_csv(path);
      const int id_col = require_column(table, "record_id", path);
      const int label_col = require_column(table, "label", path);
      for (const auto& row : table.rows) {
        pairs.push_back({field_at(row, id_col), field_at(row, label_col)});
      }
      break;
    }
    case AnnotationFormat::openimages_csv: {
      const CsvTable table = read_csv(path);
      const int id_col = require_column(table, "ImageID", path);
      const int label_col = require_column(table, "LabelName", path);
      const int conf_col = table.column("Confidence");
      for (const auto& row : table.rows) {
        if (options.confidence_threshold >= 0.0 && conf_col >= 0) {
          const std::string conf = field_at(row, conf_col);
          if (!conf.empty() &&
              parse_double(conf, "Confidence in " + path.string()) <
                  options.confidence_threshold) {
            continue;
          }
        }
        pairs.push_back({field_at(row, id_col), field_at(row, label_col)});
      }
      break;
    }
    case AnnotationFormat::audioset_csv: {
      const CsvTable table = read_csv(path, /*hash_header=*/true);
      const int id_col = require_column(table, "YTID", path);
      const int labels_col = require_column(table, "positive_labels", path);
      for (const auto& row : table.rows) {
        const std::string id = field_at(row, id_col);
        std::stringstream labels(field_at(row, labels_col));
        std::string label;
        while (std::getline(labels, label, ',')) {
          pairs.push_back({id, trim(label)});
        }
      }
      break;
    }
  }
  std::vector<LabelRecord> records = group_pairs(std::move(pairs));
  if (records.empty()) {
    throw std::runtime_error("no annotation records in " + path.string());
  }
  return records;
}

CooccurrenceMatrix build_cooccurrence_from_records(std::span<const LabelRecord> records) {
  // First pass fixes the vocab: labels from records that contribute a pair.
  std::set<std::string> vocab_set;
  for (const LabelRecord& record : records) {
    if (record.labels.size() >= 2) {
      vocab_set.insert(record.labels.begin(), record.labels.end());
    }
  }
  if (vocab_set.empty()) {
    throw std::runtime_error(
        "no record carries two or more labels; co-occurrence matrix would be empty");
  }

  CooccurrenceMatrix matrix;
  matrix.vocab.assign(vocab_set.begin(), vocab_set.end());
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < matrix.vocab.size(); ++i) {
    index[matrix.vocab[i]] = static_cast<int>(i);
  }

  PairAccumulator acc;
  for (const LabelRecord& record : records) {
    const auto& labels = record.labels;
    for (std::size_t a = 0; a + 1 < labels.size(); ++a) {
      for (std::size_t b = a + 1; b < labels.size(); ++b) {
        acc.add(index.at(labels[a]), index.at(labels[b]), 1.0);
      }
    }
  }
  matrix.entries = acc.sorted_entries();
  return matrix;
}

CooccurrenceMatrix build_cooccurrence_from_tokens(std::span<const std::string> tokens,
                                                  int window) {
  if (window < 1) throw std::invalid_argument("window must be >= 1");
  if (tokens.empty()) throw std::invalid_argument("token stream is empty");

  // Vocab covers only tokens that end up in a kept (non-self) pair.
  std::set<std::string> vocab_set;
  for (std::size_t p = 0; p < tokens.size(); ++p) {
    const std::size_t hi = std::min(tokens.size(), p + 1 + static_cast<std::size_t>(window));
    for (std::size_t q = p + 1; q < hi; ++q) {
      if (tokens[p] == tokens[q]) continue;
      vocab_set.insert(tokens[p]);
      vocab_set.insert(tokens[q]);
    }
  }

  CooccurrenceMatrix matrix;
  matrix.vocab.assign(vocab_set.begin(), vocab_set.end());
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < matrix.vocab.size(); ++i) {
    index[matrix.vocab[i]] = static_cast<int>(i);
  }

  PairAccumulator acc;
  for (std::size_t p = 0; p < tokens.size(); ++p) {
    const std::size_t hi = std::min(tokens.size(), p + 1 + static_cast<std::size_t>(window));
    for (std::size_t q = p + 1; q < hi; ++q) {
      if (tokens[p] == tokens[q]) continue;
      acc.add(index.at(tokens[p]), index.at(tokens[q]),
              1.0 / static_cast<double>(q - p));
    }
  }
  matrix.entries = acc.sorted_entries();
  return matrix;
}

void save_cooccurrence(const CooccurrenceMatrix& matrix,
                       const std::filesystem::path& triplet_path,
                       const std::filesystem::path& vocab_path) {
  std::string triplets;
  for (const CoEntry& e : matrix.entries) {
    triplets += std::to_string(e.i);
    triplets += '\t';
    triplets += std::to_string(e.j);
    triplets += '\t';
    triplets += fmt_g9(e.weight);
    triplets += '\n';
  }
  write_text_file(triplet_path, triplets);

  std::string vocab;
  for (const std::string& label : matrix.vocab) {
    vocab += label;
    vocab += '\n';
  }
  write_text_file(vocab_path, vocab);
}

CooccurrenceMatrix load_cooccurrence(const std::filesystem::path& triplet_path,
                                     const std::filesystem::path& vocab_path) {
  CooccurrenceMatrix matrix;
  matrix.vocab = read_lines(vocab_path);
  while (!matrix.vocab.empty() && matrix.vocab.back().empty()) matrix.vocab.pop_back();
  {
    std::unordered_set<std::string> seen;
    for (const std::string& label : matrix.vocab) {
      if (label.empty()) throw std::runtime_error("empty label in " + vocab_path.string());
      if (!seen.insert(label).second) {
        throw std::runtime_error("duplicate label '" + label + "' in " + vocab_path.string());
      }
    }
  }

  const int vocab_size = static_cast<int>(matrix.vocab.size());
  const std::vector<std::string> lines = read_lines(triplet_path);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    if (trim(lines[ln]).empty()) continue;
    std::stringstream ss(lines[ln]);
    std::string si, sj, sw;
    if (!std::getline(ss, si, '\t') || !std::getline(ss, sj, '\t') || !std::getline(ss, sw)) {
      throw std::runtime_error("malformed triplet at " + triplet_path.string() + ":" +
                               std::to_string(ln + 1));
    }
    const std::string context = triplet_path.string() + ":" + std::to_string(ln + 1);
    CoEntry e;
    e.i = static_cast<int>(parse_double(si, context));
    e.j = static_cast<int>(parse_double(sj, context));
    e.weight = parse_double(sw, context);
    if (e.i < 0 || e.j <= e.i || e.j >= vocab_size) {
      throw std::runtime_error("triplet indices out of order or range at " + context);
    }
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw std::runtime_error("non-positive weight at " + context);
    }
    matrix.entries.push_back(e);
  }
  std::sort(matrix.entries.begin(), matrix.entries.end(), [](const CoEntry& a, const CoEntry& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  return matrix;
}

ConceptualSystem load_embedding_text(const std::filesystem::path& path) {
  const std::vector<std::string> lines = read_lines(path);
  ConceptualSystem system;
  std::unordered_set<std::string> seen;
  std::vector<std::vector<double>> rows;
  std::size_t dim = 0;

  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    if (lines[ln].empty()) continue;
    std::stringstream ss(lines[ln]);
    std::string label;
    ss >> label;
    if (label.empty()) continue;
    std::vector<double> values;
    std::string token;
    while (ss >> token) {
      values.push_back(parse_double(token, path.string() + ":" + std::to_string(ln + 1)));
    }
    if (values.empty()) {
      throw std::runtime_error("no vector values at " + path.string() + ":" +
                               std::to_string(ln + 1));
    }
    if (rows.empty()) {
      dim = values.size();
    } else if (values.size() != dim) {
      throw std::runtime_error("inconsistent dimensionality at " + path.string() + ":" +
                               std::to_string(ln + 1) + " (expected " + std::to_string(dim) +
                               ", got " + std::to_string(values.size()) + ")");
    }
    for (double v : values) {
      if (!std::isfinite(v)) {
        throw std::runtime_error("non-finite value at " + path.string() + ":" +
                                 std::to_string(ln + 1));
      }
    }
    if (!seen.insert(label).second) {
      throw std::runtime_error("duplicate label '" + label + "' at " + path.string() + ":" +
                               std::to_string(ln + 1));
    }
    system.labels.push_back(label);
    rows.push_back(std::move(values));
  }

  if (rows.empty()) throw std::runtime_error("empty embedding file: " + path.string());
  system.vectors = Matrix(rows.size(), dim);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::copy(rows[r].begin(), rows[r].end(), system.vectors.row(r).begin());
  }
  return system;
}

void save_embedding_text(const ConceptualSystem& system, const std::filesystem::path& path) {
  std::string out;
  for (std::size_t r = 0; r < system.size(); ++r) {
    out += system.labels[r];
    for (double v : system.vectors.row(r)) {
      out += ' ';
      out += fmt_g9(v);
    }
    out += '\n';
  }
  write_text_file(path, out);
}

const double* AoATable::find(const std::string& word) const {
  auto it = entries.find(lowercase(word));
  return it == entries.end() ? nullptr : &it->second;
}

AoATable load_aoa(const std::filesystem::path& path) {
  const CsvTable table = read_csv(path);
  const int word_col = require_column(table, "word", path);
  const int rating_col = require_column(table, "rating", path);
  AoATable aoa;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const std::string word = lowercase(field_at(table.rows[r], word_col));
    if (word.empty()) continue;
    const double rating = parse_double(field_at(table.rows[r], rating_col),
                                       path.string() + " row " + std::to_string(r + 2));
    if (!(rating > 0.0)) {
      throw std::runtime_error("rating must be positive in " + path.string() + " row " +
                               std::to_string(r + 2));
    }
    if (!aoa.entries.emplace(word, rating).second) {
      throw std::runtime_error("duplicate word '" + word + "' in " + path.string());
    }
  }
  if (aoa.entries.empty()) throw std::runtime_error("no ratings in " + path.string());
  return aoa;
}

std::vector<std::string> single_word_filter(std::span<const std::string> labels) {
  std::vector<std::string> kept;
  for (const std::string& label : labels) {
    if (label.empty()) continue;
    if (label.find_first_of(" \t") == std::string::npos) kept.push_back(label);
  }
  if (kept.empty()) {
    throw std::runtime_error("single-word filter removed every label");
  }
  return kept;
}

Intersection intersect_systems(std::span<const ConceptualSystem> systems) {
  if (systems.size() < 2) {
    throw std::invalid_argument("intersection needs at least 2 systems");
  }
  std::set<std::string> common(systems[0].labels.begin(), systems[0].labels.end());
  for (std::size_t s = 1; s < systems.size(); ++s) {
    std::set<std::string> labels(systems[s].labels.begin(), systems[s].labels.end());
    std::set<std::string> next;
    std::set_intersection(common.begin(), common.end(), labels.begin(), labels.end(),
                          std::inserter(next, next.begin()));
    common.swap(next);
  }
  if (common.empty()) {
    throw std::runtime_error("systems share no concepts");
  }

  Intersection result;
  result.labels.assign(common.begin(), common.end());  // std::set is already sorted
  result.rows.resize(systems.size());
  for (std::size_t s = 0; s < systems.size(); ++s) {
    std::unordered_map<std::string, int> index;
    for (std::size_t r = 0; r < systems[s].labels.size(); ++r) {
      index[systems[s].labels[r]] = static_cast<int>(r);
    }
    result.rows[s].reserve(result.labels.size());
    for (const std::string& label : result.labels) {
      result.rows[s].push_back(index.at(label));
    }
  }
  return result;
}

std::vector<ConceptualSystem> apply_intersection(std::span<const ConceptualSystem> systems,
                                                 const Intersection& intersection) {
  if (systems.size() != intersection.rows.size()) {
    throw std::invalid_argument("intersection was built for a different system count");
  }
  std::vector<ConceptualSystem> out;
  out.reserve(systems.size());
  for (std::size_t s = 0; s < systems.size(); ++s) {
    out.push_back(select_concepts(systems[s], intersection.rows[s]));
  }
  return out;
}

}  // namespace csalign::ingest
