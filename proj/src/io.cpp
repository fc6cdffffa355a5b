#include "relrole/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "relrole/error.hpp"

namespace relrole {

  namespace fs = std::filesystem;
  using json   = nlohmann::ordered_json;

  namespace {
    constexpr char const* kModule = "relgraph-core";

    [[noreturn]] void fail(InputError::Kind kind, std::string const& what) {
      throw InputError(kModule, kind, what);
    }

    std::string read_file(fs::path const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        fail(InputError::Kind::io, "cannot open " + path.string());
      }
      std::ostringstream os;
      os << in.rdbuf();
      return os.str();
    }

    json parse_json(std::string const& text, std::string const& source) {
      try {
        return json::parse(text);
      } catch (json::parse_error const& e) {
        fail(InputError::Kind::parse, source + ": " + e.what());
      }
    }

    std::string as_label(json const& v, std::string const& source) {
      if (v.is_string()) {
        return v.get<std::string>();
      }
      if (v.is_number_integer()) {
        return std::to_string(v.get<long long>());
      }
      fail(InputError::Kind::parse,
           source + ": expected a string or integer label, got " + v.dump());
    }

    std::vector<std::string> split_row(std::string const& line) {
      std::vector<std::string> cells;
      std::string              cell;
      std::istringstream       is(line);
      while (std::getline(is, cell, ',')) {
        cells.push_back(cell);
      }
      if (!line.empty() && line.back() == ',') {
        cells.emplace_back();
      }
      return cells;
    }

    bool blank(std::string const& s) {
      return s.find_first_not_of(" \t\r") == std::string::npos;
    }
  }  // namespace

  WeightMatrix read_matrix_csv(std::istream&      in,
                               std::string const& source,
                               std::size_t        expected_size) {
    std::vector<std::vector<Rational>> rows;
    std::vector<std::size_t>           line_of_row;
    std::string                        line;
    std::size_t                        lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (blank(line)) {
        continue;
      }
      auto                  cells = split_row(line);
      std::vector<Rational> row;
      row.reserve(cells.size());
      for (std::size_t c = 0; c < cells.size(); ++c) {
        auto v = parse_rational(cells[c]);
        if (!v) {
          std::string cell = cells[c];
          if (cell.find('-') != std::string::npos) {
            fail(InputError::Kind::entry_out_of_range,
                 source + ":" + std::to_string(lineno) + ": entry "
                     + std::to_string(c + 1) + " \"" + cell
                     + "\" is outside [0,1]");
          }
          fail(InputError::Kind::parse,
               source + ":" + std::to_string(lineno) + ": entry "
                   + std::to_string(c + 1) + " \"" + cell
                   + "\" is not a number");
        }
        if (*v > 1) {
          fail(InputError::Kind::entry_out_of_range,
               source + ":" + std::to_string(lineno) + ": entry "
                   + std::to_string(c + 1) + " = " + to_exact_string(*v)
                   + " is outside [0,1]");
        }
        row.push_back(std::move(*v));
      }
      if (!rows.empty() && row.size() != rows.front().size()) {
        fail(InputError::Kind::dimension_mismatch,
             source + ":" + std::to_string(lineno) + ": row has "
                 + std::to_string(row.size()) + " entries, expected "
                 + std::to_string(rows.front().size()));
      }
      rows.push_back(std::move(row));
      line_of_row.push_back(lineno);
    }
    if (rows.empty()) {
      fail(InputError::Kind::non_square, source + ": matrix is empty");
    }
    std::size_t cols = rows.front().size();
    if (rows.size() != cols) {
      fail(InputError::Kind::non_square,
           source + ": matrix has " + std::to_string(rows.size())
               + " rows and " + std::to_string(cols) + " columns");
    }
    if (cols != expected_size) {
      fail(InputError::Kind::dimension_mismatch,
           source + ":" + std::to_string(line_of_row.front()) + ": matrix is "
               + std::to_string(cols) + "x" + std::to_string(cols)
               + " but the manifest lists " + std::to_string(expected_size)
               + " nodes");
    }
    WeightMatrix m(cols);
    for (std::size_t i = 0; i < cols; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        m(i, j) = std::move(rows[i][j]);
      }
    }
    return m;
  }

  AnyGraph load_graph(fs::path const& manifest_path) {
    std::string source = manifest_path.string();
    json        doc    = parse_json(read_file(manifest_path), source);
    if (!doc.is_object() || !doc.contains("nodes") || !doc["nodes"].is_array()
        || !doc.contains("relations") || !doc["relations"].is_array()) {
      fail(InputError::Kind::parse,
           source + ": manifest needs \"nodes\" and \"relations\" arrays");
    }
    std::vector<std::string> nodes;
    for (auto const& v : doc["nodes"]) {
      nodes.push_back(as_label(v, source));
    }
    if (doc["relations"].empty()) {
      fail(InputError::Kind::no_relations, source + ": no relations listed");
    }
    std::vector<Relation<WeightMatrix>> rels;
    std::set<std::string>               names;
    bool                                weighted = false;
    for (auto const& r : doc["relations"]) {
      if (!r.is_object() || !r.contains("name") || !r.contains("file")
          || !r["name"].is_string() || !r["file"].is_string()) {
        fail(InputError::Kind::parse,
             source + ": each relation needs string \"name\" and \"file\"");
      }
      auto name = r["name"].get<std::string>();
      if (!names.insert(name).second) {
        fail(InputError::Kind::duplicate_relation,
             source + ": duplicate relation name \"" + name + "\"");
      }
      fs::path file = manifest_path.parent_path() / r["file"].get<std::string>();
      std::ifstream in(file);
      if (!in) {
        fail(InputError::Kind::io, "cannot open " + file.string());
      }
      auto m = read_matrix_csv(in, file.string(), nodes.size());
      weighted = weighted || !m.is_boolean();
      rels.push_back({std::move(name), std::move(m)});
    }
    if (weighted) {
      return WeightedMultirelationalGraph(std::move(nodes), std::move(rels));
    }
    std::vector<Relation<BoolMatrix>> brels;
    for (auto& r : rels) {
      brels.push_back({std::move(r.name), r.matrix.to_bool()});
    }
    return MultirelationalGraph(std::move(nodes), std::move(brels));
  }

  void write_matrix_csv(std::ostream& out, BoolMatrix const& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j) {
        out << (j ? "," : "") << (m.get(i, j) ? '1' : '0');
      }
      out << '\n';
    }
  }

  void write_matrix_csv(std::ostream& out, WeightMatrix const& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j) {
        out << (j ? "," : "") << to_exact_string(m(i, j));
      }
      out << '\n';
    }
  }

  template <typename Matrix>
  void save_graph(BasicGraph<Matrix> const& g,
                  fs::path const&           dir,
                  std::string const&        manifest_name,
                  std::string const&        file_prefix) {
    fs::create_directories(dir);
    json doc;
    doc["nodes"]     = g.node_labels();
    doc["relations"] = json::array();
    for (auto const& rel : g.relations()) {
      std::string   file = file_prefix + rel.name + ".csv";
      std::ofstream out(dir / file);
      if (!out) {
        fail(InputError::Kind::io, "cannot write " + (dir / file).string());
      }
      write_matrix_csv(out, rel.matrix);
      doc["relations"].push_back({{"name", rel.name}, {"file", file}});
    }
    std::ofstream out(dir / manifest_name);
    out << doc.dump(2) << '\n';
  }

  template void save_graph(MultirelationalGraph const&,
                           fs::path const&,
                           std::string const&,
                           std::string const&);
  template void save_graph(WeightedMultirelationalGraph const&,
                           fs::path const&,
                           std::string const&,
                           std::string const&);

  Partition parse_partition(std::string const&              text,
                            std::string const&              source,
                            std::vector<std::string> const& node_labels) {
    json doc = parse_json(text, source);
    if (!doc.is_object()) {
      fail(InputError::Kind::parse,
           source + ": partition must be a JSON object");
    }
    std::map<std::string, std::size_t> node_index;
    for (std::size_t i = 0; i < node_labels.size(); ++i) {
      node_index.emplace(node_labels[i], i);
    }
    std::vector<std::string>           block_of(node_labels.size());
    std::vector<bool>                  seen(node_labels.size(), false);
    for (auto const& [key, value] : doc.items()) {
      auto it = node_index.find(key);
      if (it == node_index.end()) {
        fail(InputError::Kind::unknown_node,
             source + ": unknown node label \"" + key + "\"");
      }
      auto label = as_label(value, source);
      if (label.empty()) {
        fail(InputError::Kind::empty_block_label,
             source + ": node \"" + key + "\" has an empty block label");
      }
      seen[it->second]     = true;
      block_of[it->second] = std::move(label);
    }
    for (std::size_t i = 0; i < node_labels.size(); ++i) {
      if (!seen[i]) {
        fail(InputError::Kind::missing_node,
             source + ": node \"" + node_labels[i] + "\" is not assigned");
      }
    }
    std::map<std::string, std::size_t> ids;
    std::vector<std::string>           labels;
    std::vector<std::size_t>           assignment;
    for (auto const& label : block_of) {
      auto [it, inserted] = ids.emplace(label, labels.size());
      if (inserted) {
        labels.push_back(label);
      }
      assignment.push_back(it->second);
    }
    return Partition::from_assignment(assignment, labels);
  }

  Partition load_partition(fs::path const&                 path,
                           std::vector<std::string> const& node_labels) {
    return parse_partition(read_file(path), path.string(), node_labels);
  }

  std::string partition_to_json(Partition const&                p,
                                std::vector<std::string> const& node_labels) {
    json doc = json::object();
    for (std::size_t i = 0; i < p.size(); ++i) {
      doc[node_labels.at(i)] = p.block_labels()[p.block_of(i)];
    }
    return doc.dump(2);
  }

  void save_partition(Partition const&                p,
                      std::vector<std::string> const& node_labels,
                      fs::path const&                 path) {
    std::ofstream out(path);
    if (!out) {
      fail(InputError::Kind::io, "cannot write " + path.string());
    }
    out << partition_to_json(p, node_labels) << '\n';
  }

  NestedHierarchy load_hierarchy(std::vector<fs::path> const&    paths,
                                 std::vector<std::string> const& node_labels) {
    std::vector<Partition> levels;
    for (auto const& p : paths) {
      levels.push_back(load_partition(p, node_labels));
    }
    return NestedHierarchy(std::move(levels));
  }

  std::vector<std::string> const& node_labels_of(AnyGraph const& g) {
    return std::visit(
        [](auto const& x) -> std::vector<std::string> const& {
          return x.node_labels();
        },
        g);
  }

}  // namespace relrole
