// Copyright 2026 The wst Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// wst: character tables, tori, Weil characters and verification checks for
// small classical groups.
#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "wst/chartab.hpp"
#include "wst/errors.hpp"
#include "wst/registry.hpp"
#include "wst/theorems.hpp"
#include "wst/tori.hpp"
#include "wst/weil.hpp"

using namespace wst;
using nlohmann::json;

namespace {

struct Options {
  std::string group = "gl";
  int n = 2;
  uint32_t q = 2;
  std::string format = "text";
  std::string out;
  uint64_t cap = kCliDefaultCap;
  bool allow_large = false;
  std::string checks = "all";
  std::string tier = "fast";
  std::string export_table;
  bool list_tori = false;
  bool weil_values = false;
  bool dump_group = false;
  int jobs = 1;
};

GroupKind parse_kind(const std::string& s) {
  if (s == "gl") return GroupKind::GL;
  if (s == "sp") return GroupKind::Sp;
  if (s == "u" || s == "gu") return GroupKind::GU;
  throw InvalidArgument("unknown group kind " + s);
}

// Sp takes n as the rank (Sp(2n,q)); GL and GU take the matrix degree.
GroupSpec spec_from(const Options& o) { return GroupSpec{parse_kind(o.group), o.n, o.q}; }

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw InvalidArgument("cannot write " + o.out);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
  return r + "\"";
}

std::string format_reports(const Options& o, std::vector<CheckReport> reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const CheckReport& a, const CheckReport& b) {
    return std::tie(a.spec, a.check) < std::tie(b.spec, b.check);
  });
  std::ostringstream s;
  if (o.format == "json") {
    json j = json::array();
    for (const auto& r : reports) j.push_back(r.to_json());
    s << j.dump(2);
  } else if (o.format == "csv") {
    s << "group,check,status,ms\n";
    for (const auto& r : reports) s << r.spec.name() << ',' << r.check << ',' << status_name(r.status) << ',' << r.ms << '\n';
  } else {
    for (const auto& r : reports) {
      s << r.spec.name() << "  " << r.check << "  " << status_name(r.status) << "  (" << r.ms << " ms)\n";
      if (r.details.contains("failures"))
        for (const auto& f : r.details["failures"]) s << "    " << f.get<std::string>() << '\n';
    }
  }
  return s.str();
}

int exit_for(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (r.status == Status::Fail) return 1;
  return 0;
}

GroupPtr build(const Options& o, const GroupSpec& s) { return classical_group(s, o.cap); }

std::vector<CheckReport> run_instance(const Options& o, const GroupSpec& s, const std::vector<std::string>& names) {
  GroupPtr G = build(o, s);
  std::vector<CheckReport> out;
  for (const auto& name : names) out.push_back(run_check(name, G));
  return out;
}

std::vector<std::string> parse_checks(const std::string& arg) {
  if (arg == "all") return check_names();
  std::vector<std::string> names;
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!is_check_name(item)) throw InvalidArgument("unknown check " + item);
    names.push_back(item);
  }
  if (names.empty()) throw InvalidArgument("no checks selected");
  return names;
}

int cmd_table(const Options& o) {
  GroupSpec s = spec_from(o);
  GroupPtr G = build(o, s);
  if (o.dump_group) {
    emit(o, G->summary_json().dump(2));
    return 0;
  }
  auto T = character_table(G);
  auto v = T->validate();
  if (!o.export_table.empty()) {
    std::ofstream f(o.export_table);
    if (!f) throw InvalidArgument("cannot write " + o.export_table);
    f << T->to_json().dump() << '\n';
  }
  std::ostringstream out;
  if (o.format == "json") {
    out << T->to_json().dump(2);
  } else if (o.format == "csv") {
    out << "irr";
    for (size_t c = 0; c < G->num_classes(); ++c) out << ",c" << c;
    out << '\n';
    for (size_t i = 0; i < T->size(); ++i) {
      out << i;
      for (size_t c = 0; c < G->num_classes(); ++c) out << ',' << csv_escape((*T)[i][c].to_string());
      out << '\n';
    }
  } else {
    out << G->name() << ": order " << G->order() << ", " << G->num_classes() << " classes, conductor "
        << T->conductor() << '\n';
    out << "degrees:";
    for (size_t i = 0; i < T->size(); ++i) out << ' ' << T->degree(i);
    out << "\nvalidation: " << (v.ok() ? "ok" : "FAILED") << (v.detail.empty() ? "" : " (" + v.detail + ")") << '\n';
  }
  emit(o, out.str());
  return v.ok() ? 0 : 1;
}

int cmd_tori(const Options& o) {
  GroupSpec s = spec_from(o);
  GroupPtr G = build(o, s);
  auto tori = build_all_tori(G);
  if (o.list_tori) {
    std::ostringstream out;
    json j = json::array();
    bool ok = true;
    for (const auto& t : tori) {
      json e{{"torus", t.desc.label()}, {"order", t.order()}, {"neutral", t.desc.neutral()}};
      for (const auto& c : verify_t_decomposition(t)) {
        e["checks"][c.name] = {{"ok", c.ok}, {"detail", c.detail}};
        ok = ok && c.ok;
      }
      j.push_back(e);
      if (o.format == "text") {
        out << t.desc.label() << "  |T| = " << t.order() << (t.desc.neutral() ? "  neutral" : "") << '\n';
        for (const auto& c : verify_t_decomposition(t))
          out << "    " << c.name << ": " << (c.ok ? "ok" : "FAILED") << "  " << c.detail << '\n';
      } else if (o.format == "csv") {
        if (out.tellp() == 0) out << "torus,order,neutral\n";
        out << csv_escape(t.desc.label()) << ',' << t.order() << ',' << (t.desc.neutral() ? 1 : 0) << '\n';
      }
    }
    if (o.format == "json") out << j.dump(2);
    emit(o, out.str());
    return ok ? 0 : 1;
  }
  auto rep = check_torus_census(G, tori);
  if (o.format == "json") {
    emit(o, rep.details.dump(2));
  } else {
    std::ostringstream out;
    if (o.format == "csv") out << "torus,order,weyl,normalizer,finite_normalizer,identity\n";
    for (const auto& e : rep.details["tori"]) {
      if (o.format == "csv")
        out << csv_escape(e["torus"].get<std::string>()) << ',' << e["order"] << ',' << e["weyl"] << ','
            << e["normalizer"] << ',' << e["finite_normalizer"] << ',' << e["normalizer_identity"] << '\n';
      else
        out << e["torus"].get<std::string>() << "  |T| = " << e["order"] << "  |W(T)^F| = " << e["weyl"]
            << "  |N(T)| = " << e["normalizer"] << '\n';
    }
    if (o.format == "text") out << "census: " << (rep.ok ? "ok" : "FAILED") << '\n';
    emit(o, out.str());
  }
  return rep.ok ? 0 : 1;
}

int cmd_weil(const Options& o) {
  GroupSpec s = spec_from(o);
  GroupPtr G = build(o, s);
  WeilData w = s.kind == GroupKind::GL ? weil_data(G) : weil_semisimple(G, build_all_tori(G), false);
  if (o.weil_values || o.format == "csv") {
    std::ostringstream out;
    out << "class,order,N,value,source\n";
    for (size_t c = 0; c < G->num_classes(); ++c)
      out << c << ',' << G->cls(c).order << ',' << fixed_space_dim(G, c) << ',' << w.integer_values[c] << ','
          << source_name(w.source[c]) << '\n';
    emit(o, out.str());
  } else if (o.format == "json") {
    emit(o, w.to_json().dump(2));
  } else {
    std::ostringstream out;
    out << G->name() << ": ω(1) = " << w.integer_values[0] << ", " << w.realizations << " torus realizations, "
        << w.conflicts.size() << " conflicts\n";
    emit(o, out.str());
  }
  return w.conflicts.empty() ? 0 : 1;
}

int cmd_verify(const Options& o) {
  auto names = parse_checks(o.checks);
  auto reports = run_instance(o, spec_from(o), names);
  emit(o, format_reports(o, reports));
  return exit_for(reports);
}

int cmd_suite(const Options& o) {
  auto tier = parse_tier(o.tier);
  if (!tier) throw InvalidArgument("unknown tier " + o.tier);
  std::vector<InstanceSpec> chosen;
  for (const auto& inst : registry())
    if (inst.tier == *tier) chosen.push_back(inst);
  std::vector<CheckReport> reports;
  std::vector<std::future<std::vector<CheckReport>>> pending;
  auto task = [&o](InstanceSpec inst) {
    return run_instance(o, inst.spec, inst.checks.empty() ? check_names() : inst.checks);
  };
  for (const auto& inst : chosen) {
    if ((int)pending.size() >= std::max(1, o.jobs)) {
      auto r = pending.front().get();
      reports.insert(reports.end(), r.begin(), r.end());
      pending.erase(pending.begin());
    }
    pending.push_back(std::async(std::launch::async, task, inst));
  }
  for (auto& f : pending) {
    auto r = f.get();
    reports.insert(reports.end(), r.begin(), r.end());
  }
  emit(o, format_reports(o, reports));
  return exit_for(reports);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact character theory for small classical groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", o.out, "Write output to this file");
  app.add_option("--cap", o.cap, "Largest group order to enumerate");
  app.add_flag("--allow-large-cap", o.allow_large, "Acknowledge a cap above the default");
  auto add_group = [&o](CLI::App* sub) {
    sub->add_option("--group", o.group, "gl, sp or u")->required()->check(CLI::IsMember({"gl", "sp", "u", "gu"}));
    sub->add_option("--n", o.n, "GL(n,q), Sp(2n,q) or GU(n,q)")->required()->check(CLI::Range(0, 8));
    sub->add_option("--q", o.q, "Field size")->required();
  };
  auto* table = app.add_subcommand("table", "Character table of a group");
  add_group(table);
  table->add_option("--export-table", o.export_table, "Write the validated table as JSON");
  table->add_flag("--dump-group", o.dump_group, "Print the class structure instead of the table");
  auto* tori = app.add_subcommand("tori", "Maximal tori and the torus census");
  add_group(tori);
  tori->add_flag("--list-tori", o.list_tori, "List tori with their decomposition checks");
  auto* weil = app.add_subcommand("weil", "Weil character values");
  add_group(weil);
  weil->add_flag("--weil-values", o.weil_values, "CSV of class, order, N(V;g), value");
  auto* verify = app.add_subcommand("verify", "Run checks on one group");
  add_group(verify);
  verify->add_option("--check", o.checks, "Comma-separated check names or all");
  auto* suite = app.add_subcommand("suite", "Run the registry");
  suite->add_option("--tier", o.tier, "fast, standard or heavy")->check(CLI::IsMember({"fast", "standard", "heavy"}));
  suite->add_option("--jobs", o.jobs, "Instances run concurrently")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    if (o.cap > kCliDefaultCap && !o.allow_large)
      throw InvalidArgument("--cap above " + std::to_string(kCliDefaultCap) + " needs --allow-large-cap");
    if (*table) return cmd_table(o);
    if (*tori) return cmd_tori(o);
    if (*weil) return cmd_weil(o);
    if (*verify) return cmd_verify(o);
    if (*suite) return cmd_suite(o);
  } catch (const CapExceeded& e) {
    std::cerr << "wst: " << e.what() << '\n';
    return 2;
  } catch (const InvalidArgument& e) {
    std::cerr << "wst: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "wst: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
