/**
 * Copyright 2026 The semiconv Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "semiconv/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "semiconv/automaton.hpp"
#include "semiconv/error.hpp"
#include "semiconv/experiments.hpp"
#include "semiconv/holonomy.hpp"
#include "semiconv/semigroup.hpp"
#include "semiconv/weights.hpp"

namespace semiconv {

  std::vector<std::size_t> read_index_file(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw IoError("cannot open " + path.string());
    }
    std::vector<std::size_t> out;
    std::string              line;
    std::uint64_t            lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto const first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') {
        continue;
      }
      auto const last = line.find_last_not_of(" \t\r");
      std::string const tok = line.substr(first, last - first + 1);
      if (tok.find_first_not_of("0123456789") != std::string::npos) {
        throw FormatError(path.string() + ": not an index: '" + tok + "' on line "
                              + std::to_string(lineno),
                          lineno);
      }
      out.push_back(std::stoull(tok));
    }
    return out;
  }

  namespace {

    struct SgOptions {
      int                      r           = 1;
      int                      a           = -1;  // unset
      std::size_t              limit       = Semigroup::default_element_limit;
      bool                     dump        = false;
      std::string              format      = "text";
      std::string              table_fmt   = "words";
      std::size_t              table_max   = 1000;
      bool                     allow_large = false;
      std::vector<std::string> gens;
      std::string              output;
    };

    struct NetOptions {
      std::string         weights;
      std::string         data;
      std::string         mode         = "float";
      std::int64_t        r            = 0;
      double              q            = 0;
      std::size_t         subset       = 0;  // 0: whole test set for eval
      std::uint64_t       seed         = 0;
      std::string         subset_file;
      std::string         weight_scale = "activation";
      std::string         sum_policy   = "exact";
      bool                quant_dense  = false;
      bool                no_bias      = false;
      std::string         out;
      std::string         format       = "csv";
      std::vector<std::int64_t> r_list = SweepConfig{}.r_list;
      std::vector<double>       q_list = SweepConfig{}.q_list;
      bool                full         = false;
      bool                timing       = false;
    };

    Semigroup build_semigroup(SgOptions const& o) {
      if (o.a >= 0) {
        return subsemigroup(o.r, o.a, o.limit);
      }
      return enumerate_closure(make_generators(o.r), o.limit);
    }

    std::optional<int> a_of(SgOptions const& o) {
      return o.a >= 0 ? std::optional<int>(o.a) : std::nullopt;
    }

    void cmd_enum(SgOptions const& o, std::ostream& out) {
      auto const sg = build_semigroup(o);
      out << "size=" << sg.size() << " generators=" << sg.generators().size() << "\n";
      if (o.dump) {
        sg.dump(out);
      }
    }

    void cmd_table(SgOptions const& o, std::ostream& out) {
      auto const sg = build_semigroup(o);
      if (sg.size() > o.table_max) {
        throw InvalidParameter("semigroup has " + std::to_string(sg.size())
                               + " elements; raise --max-size to print its table");
      }
      auto const t     = multiplication_table(sg);
      bool const words = o.table_fmt == "words";
      auto       label = [&](std::size_t i) {
        return words ? sg.generators().format(sg.word(i)) : std::to_string(i);
      };
      // TSV: row element applied first, column element second.
      out << "*";
      for (std::size_t j = 0; j < sg.size(); ++j) {
        out << "\t" << label(j);
      }
      out << "\n";
      for (std::size_t i = 0; i < sg.size(); ++i) {
        out << label(i);
        for (std::size_t j = 0; j < sg.size(); ++j) {
          out << "\t" << label(t.at(i, j));
        }
        out << "\n";
      }
    }

    void cmd_decompose(SgOptions const& o, std::ostream& out) {
      auto const sg  = build_semigroup(o);
      auto const rep = decompose(sg, a_of(o), o.allow_large);
      out << (o.format == "json" ? rep.to_json() : rep.to_text());
    }

    void cmd_dot(SgOptions const& o, std::ostream& out) {
      auto gens = o.a >= 0 ? make_generators(o.r, o.a) : make_generators(o.r);
      auto text = export_automaton(
          gens, o.gens.empty() ? std::nullopt : std::optional<std::vector<std::string>>(o.gens));
      if (o.output.empty()) {
        out << text;
        return;
      }
      std::ofstream f(o.output);
      if (!f || !(f << text)) {
        throw IoError("cannot write " + o.output);
      }
    }

    QuantOptions quant_options(NetOptions const& o) {
      QuantOptions q;
      q.weight_scale   = o.weight_scale == "layer-max" ? WeightScale::layer_max : WeightScale::activation_map;
      q.sum_policy     = o.sum_policy == "clip" ? SumPolicy::clip_per_channel : SumPolicy::exact;
      q.quantize_dense = o.quant_dense;
      q.include_bias   = !o.no_bias;
      return q;
    }

    void cmd_eval(NetOptions const& o, std::ostream& out) {
      bool const quant = o.mode == "quant";
      if (quant && (o.r < 1 || !(o.q > 0))) {
        throw InvalidParameter("--mode quant needs --r >= 1 and --q > 0");
      }
      auto const net  = load_weights(o.weights);
      auto const data = load_mnist_dir(o.data);
      SweepConfig cfg;
      cfg.seed = o.seed;
      if (!o.subset_file.empty()) {
        cfg.indices = read_index_file(o.subset_file);
      } else if (o.subset > 0) {
        cfg.subset_size = o.subset;
      } else {
        cfg.full = true;
      }
      auto const idx = resolve_indices(cfg, data.size());
      net.infer_shapes(data.image_shape());
      InferenceEngine const engine = quant
          ? InferenceEngine(net, Mode::quantized, QuantParams(o.r, o.q), quant_options(o))
          : InferenceEngine(net, Mode::float_path);
      std::size_t const correct = count_correct(engine, data, idx);

      nlohmann::ordered_json j;
      j["mode"] = quant ? "quant" : "float";
      if (quant) {
        j["r"] = o.r;
        j["q"] = o.q;
      }
      j["images"]   = idx.size();
      j["correct"]  = correct;
      j["accuracy"] = idx.empty() ? 0.0 : 100.0 * static_cast<double>(correct) / static_cast<double>(idx.size());
      out << j.dump() << "\n";
    }

    void cmd_sweep(NetOptions const& o, std::ostream& out, std::ostream& err) {
      auto const  fmt = parse_report_format(o.format);
      SweepConfig cfg;
      cfg.r_list = o.r_list;
      cfg.q_list = o.q_list;
      cfg.seed   = o.seed;
      cfg.full   = o.full;
      cfg.quant  = quant_options(o);
      if (o.subset > 0) {
        cfg.subset_size = o.subset;
      }
      if (!o.subset_file.empty()) {
        cfg.indices = read_index_file(o.subset_file);
      }
      cfg.validate();
      auto const net  = load_weights(o.weights);
      auto const crc  = file_crc32(o.weights);
      auto const data = load_mnist_dir(o.data);
      auto const res
          = run_sweep(net, data, cfg, crc, [&](std::string const& line) { err << line << "\n" << std::flush; });
      auto const doc = report(res, fmt, ReportOptions{o.timing});
      if (o.out.empty()) {
        out << doc;
        return;
      }
      std::ofstream f(o.out, std::ios::binary | std::ios::trunc);
      if (!f || !(f << doc)) {
        throw IoError("cannot write " + o.out);
      }
    }

    bool is_data_error(Error const& e) {
      return dynamic_cast<FormatError const*>(&e) != nullptr
             || dynamic_cast<IoError const*>(&e) != nullptr;
    }

  }  // namespace

  int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite transformation semigroups of quantized convolutions", "semiconv"};
    app.require_subcommand(1);
    SgOptions  so;
    NetOptions no;

    auto* sg = app.add_subcommand("sg", "Semigroup enumeration and analysis");
    sg->require_subcommand(1);
    auto add_radius = [&](CLI::App* c) {
      c->add_option("--r", so.r, "State radius, X_r = {-r..r}")->required()->check(CLI::Range(1, 127));
      c->add_option("--a", so.a, "Use CS_{r-a}: multiplications only for primes <= a")
          ->check(CLI::NonNegativeNumber);
    };
    auto* en = sg->add_subcommand("enum", "Enumerate CS_r and print its size");
    add_radius(en);
    en->add_option("--limit", so.limit, "Abort after this many elements")->check(CLI::PositiveNumber);
    en->add_flag("--dump", so.dump, "Print every element with its canonical word");

    auto* tb = sg->add_subcommand("table", "Multiplication table (row applied first)");
    add_radius(tb);
    tb->add_option("--format", so.table_fmt, "words or indices")
        ->check(CLI::IsMember({"words", "indices"}));
    tb->add_option("--max-size", so.table_max, "Refuse larger semigroups")->check(CLI::PositiveNumber);

    auto* de = sg->add_subcommand("decompose", "Holonomy levels, point counts and group orders");
    add_radius(de);
    de->add_option("--format", so.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    de->add_flag("--allow-large", so.allow_large, "Permit r > 7");

    auto* dt = sg->add_subcommand("dot", "Graphviz automaton of the generators on X_r");
    add_radius(dt);
    dt->add_option("--gens", so.gens, "Generators to draw (default: all)")->delimiter(',');
    dt->add_option("-o,--output", so.output, "Output file (default: stdout)");

    auto* net = app.add_subcommand("net", "Quantized network evaluation");
    net->require_subcommand(1);
    auto add_common = [&](CLI::App* c) {
      c->add_option("--weights", no.weights, "SGCW weight file")->required();
      c->add_option("--data", no.data, "Directory with the MNIST t10k IDX files")->required();
      c->add_option("--subset", no.subset, "Evaluate this many sampled test images");
      c->add_option("--seed", no.seed, "Subset sampling seed");
      c->add_option("--subset-file", no.subset_file, "File of image indices, one per line");
      c->add_option("--weight-scale", no.weight_scale, "activation or layer-max")
          ->check(CLI::IsMember({"activation", "layer-max"}));
      c->add_option("--sum-policy", no.sum_policy, "exact or clip")->check(CLI::IsMember({"exact", "clip"}));
      c->add_flag("--quantize-dense", no.quant_dense, "Quantize dense layers too");
      c->add_flag("--no-bias", no.no_bias, "Drop biases from quantized layers");
    };
    auto* ev = net->add_subcommand("eval", "Accuracy of one configuration (JSON line)");
    add_common(ev);
    ev->add_option("--mode", no.mode, "float or quant")->check(CLI::IsMember({"float", "quant"}));
    ev->add_option("--r", no.r, "State radius")->check(CLI::PositiveNumber);
    ev->add_option("--q", no.q, "Clip magnitude")->check(CLI::PositiveNumber);

    auto* sw = net->add_subcommand("sweep", "Accuracy grid over (r, q)");
    add_common(sw);
    sw->add_option("--out", no.out, "Report file (default: stdout)");
    sw->add_option("--format", no.format, "csv, json or md")->check(CLI::IsMember({"csv", "json", "md"}));
    sw->add_option("--r-list", no.r_list, "Radii")->delimiter(',')->check(CLI::PositiveNumber);
    sw->add_option("--q-list", no.q_list, "Clip magnitudes")->delimiter(',')->check(CLI::PositiveNumber);
    sw->add_flag("--full", no.full, "Use all test images");
    sw->add_flag("--timing", no.timing, "Include wall times (makes reports non-reproducible)");

    try {
      std::vector<std::string> rev(args.rbegin(), args.rend());
      app.parse(rev);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? exit_ok : exit_usage;
    }

    try {
      if (en->parsed()) {
        cmd_enum(so, out);
      } else if (tb->parsed()) {
        cmd_table(so, out);
      } else if (de->parsed()) {
        cmd_decompose(so, out);
      } else if (dt->parsed()) {
        cmd_dot(so, out);
      } else if (ev->parsed()) {
        cmd_eval(no, out);
      } else if (sw->parsed()) {
        cmd_sweep(no, out, err);
      }
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return is_data_error(e) ? exit_data_error : exit_usage;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << "\n";
      return exit_data_error;
    }
    return exit_ok;
  }

  int run_cli(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
      args.emplace_back(argv[i]);
    }
    return run_cli(args, out, err);
  }

}  // namespace semiconv
