#include "horoaut/render.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <string_view>

namespace horoaut {

namespace {

struct Style {
  bool on;
  std::string bold(std::string_view s) const { return wrap("\033[1m", s); }
  std::string good(std::string_view s) const { return wrap("\033[32m", s); }
  std::string bad(std::string_view s) const { return wrap("\033[33m", s); }
  std::string flag(bool value, bool good_when) const {
    const std::string_view s = value ? "true" : "false";
    return value == good_when ? good(s) : bad(s);
  }

 private:
  std::string wrap(std::string_view code, std::string_view s) const {
    return on ? std::string(code) + std::string(s) + "\033[0m" : std::string(s);
  }
};

std::string root_list(const std::vector<DemazureRoot>& roots) {
  std::string out;
  for (const auto& r : roots) out += " " + format_vector(r.m);
  return out.empty() ? " none" : out;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : " ") + s;
  return out.empty() ? "none" : out;
}

}  // namespace

bool color_enabled(bool is_terminal) {
  const char* env = std::getenv("HOROAUT_COLOR");
  if (env != nullptr && std::string_view(env) == "never") return false;
  return is_terminal;
}

std::string render_text(const FanRootsDocument& doc, bool color) {
  const Style st{color};
  const ToricAutReport& r = doc.report;
  const Int dim_s = r.dim_aut - static_cast<Int>(r.roots.size());
  std::ostringstream out;
  out << st.bold("Demazure roots") << " (" << r.roots.size() << "):\n";
  for (const auto& root : r.roots) out << "  " << root_label(root.m) << "  ray " << root.ray_index << "\n";
  out << "semisimple (" << r.n_semisimple << "):" << root_list(r.partition.semisimple) << "\n";
  out << "unipotent (" << r.n_unipotent << "):" << root_list(r.partition.unipotent) << "\n";
  out << "dim Aut⁰(X) = dim S + |R| = " << dim_s << " + " << r.roots.size() << " = " << r.dim_aut << "\n";
  out << "reductive: " << st.flag(r.reductive, true) << "\n";
  if (doc.oracle_radius) out << "oracle: brute force over |m|_inf <= " << *doc.oracle_radius << " agrees\n";
  return out.str();
}

std::string render_text(const HoroDocument& doc, bool color) {
  const Style st{color};
  const AutReport& r = doc.report;
  const Int sigma = std::accumulate(r.unipotent_dims.begin(), r.unipotent_dims.end(), Int{0});
  std::ostringstream out;
  out << st.bold("B⁺-roots") << " (" << r.roots.size() << "):\n";
  for (const BRoot& b : r.roots) {
    out << "  " << root_label(b.m_fiber) << "  ray " << b.ray_index << "  fw=" << format_vector(b.m_ambient.fw)
        << " torus=" << format_vector(b.m_ambient.torus) << "  " << root_kind_name(b.kind) << "  dim V(m) = " << b.v_dim
        << "\n";
  }
  out << "dim Aut⁰(X) = dim Aut⁰(G/P) + dim S + |S⁺| + Σ dim V(m)\n";
  out << r.dim_aut_total << " = " << r.dim_aut_gp << " + " << r.dim_s << " + " << r.n_semisimple << " + " << sigma
      << "\n";
  out << "dim Levi = " << r.dim_levi << ", dim unipotent radical = " << r.dim_unipotent_radical << "\n";
  out << "reductive: " << st.flag(r.reductive, true) << "\n";
  out << "Levi roots: " << join(r.levi_generators) << "\n";
  out << "radical roots: " << join(r.radical_generators) << "\n";
  std::vector<std::string> extends, normalized;
  for (const auto& e : doc.extendability.extends) {
    extends.push_back(root_label(e.m_fiber));
    if (e.g_normalized) normalized.push_back(root_label(e.m_fiber));
  }
  std::vector<std::string> stuck;
  for (const auto& m : doc.extendability.does_not_extend) stuck.push_back(root_label(m));
  out << "fiber roots that extend: " << join(extends) << "\n";
  out << "  normalized by G: " << join(normalized) << "\n";
  out << "fiber roots that do not extend: " << join(stuck) << "\n";
  if (!r.g_surjects) {
    out << st.bad("caveat:") << " G does not surject onto Aut⁰(G/P); statements about subgroups generated by G"
        << " hold with Aut⁰(G/P) in place of G\n";
  }
  return out.str();
}

std::string render_text(const BundleDocument& doc, bool color) {
  const Style st{color};
  const BundleReport& r = doc.report;
  Int iso = 0, sigma = 0, k = 1;
  for (const PairRoot& p : r.roots.pair_roots) {
    k = std::max<Int>(k, static_cast<Int>(std::max(p.i, p.j)) + 1);
    if (p.iso) ++iso;
    else if (p.nef) sigma += p.v_dim.value_or(0);
  }
  std::ostringstream out;
  out << st.bold("pairs") << " (i, j) for chi_i - chi_j:\n";
  for (const PairRoot& p : r.roots.pair_roots) {
    out << "  (" << p.i << ", " << p.j << ")  ";
    if (!p.nef) out << "not nef\n";
    else out << (p.iso ? "iso" : "nef") << "  dim V = " << *p.v_dim << "\n";
  }
  out << "dim Aut⁰(X) = dim Aut⁰(Y) + (k - 1) + #iso + Σ dim V\n";
  out << r.roots.dim_aut_total << " = " << r.roots.dim_aut_base << " + " << (k - 1) << " + " << iso << " + " << sigma
      << "\n";
  out << "fano: " << fano_status_name(r.fano) << ", reductive: " << st.flag(r.roots.reductive, true)
      << ", k_unstable: " << k_unstability_name(r.k_unstable) << "\n";
  out << "K_Y dual = " << format_vector(r.base_anticanonical) << ", index " << r.base_fano_index << "\n";
  if (doc.pipeline_agrees) out << "pipeline: " << (*doc.pipeline_agrees ? "agrees" : "disagrees") << "\n";
  if (!r.roots.g_surjects) out << st.bad("caveat:") << " G does not surject onto Aut⁰(Y)\n";
  return out.str();
}

}  // namespace horoaut
