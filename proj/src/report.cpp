#include "onepoint/report.hpp"

#include <sstream>

#include "onepoint/fibration.hpp"

namespace onepoint {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

template <class T>
ordered_json opt(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

template <class T>
std::optional<T> opt_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

FibrationRecord fibration_record(const Pencil& P) {
  FibrationReport fr = analyze_fibration(P);
  FibrationRecord out;
  for (const auto& f : fr.fibers) {
    FiberRecord rec{f.param.to_string(), kodaira_type(f).to_string(), {}, f.adjacency};
    for (const auto& c : f.components) {
      std::optional<std::string> s;
      if (c.singularity) s = sing_kind_name(*c.singularity);
      rec.components.push_back({c.label, c.multiplicity, c.self_intersection, c.genus, s});
    }
    out.fibers.push_back(std::move(rec));
  }
  for (const auto& k : fr.types) out.kodaira_types.push_back(k.to_string());
  out.euler_sum = fr.euler_sum;
  out.mw_rank = fr.st.mw_rank;
  out.extremal = fr.st.extremal;
  out.mp_label = mp_label_name(fr.label);
  out.beauville_row = fr.beauville;
  return out;
}

}  // namespace

Report analyze_pencil(const Pencil& P) {
  Report r;
  r.field = P.field()->label();
  r.pencil = {format_form(P.gen0()), format_form(P.gen1())};
  PencilClass pc = classify(P);
  r.classification = pencil_kind_name(pc.kind);
  if (pc.kind == PencilKind::GenericSingular)
    throw Error(Errc::PreconditionFailed, "every member of the pencil is singular");
  if (pc.base_point) r.base_point = pc.base_point->to_string();
  if (pc.flex_line) r.flex_line = pc.flex_line->to_string();

  DiscProfile dp = discriminant_profile(P);
  r.discriminant = dp.disc.affine.to_string() + " (degree " + std::to_string(dp.disc.degree) + ")";
  r.profile = dp.multiplicities();
  r.profile_complete = dp.complete;
  if (!dp.complete) r.warnings.push_back("some discriminant roots lie outside " + r.field);

  SingularMembers sm = singular_members(P);
  for (const auto& m : sm.members) {
    MemberRecord rec{m.param.to_string(), format_form(m.form), m.disc_multiplicity, {}, m.irreducible, m.irreducible_certified};
    for (const auto& s : m.singularities) rec.singularities.push_back({s.point.to_string(), sing_kind_name(s.kind)});
    r.singular_members.push_back(std::move(rec));
  }
  for (const auto& [mult, count] : sm.unresolved)
    r.warnings.push_back(std::to_string(count) + " unresolved singular parameter(s) of discriminant multiplicity " + std::to_string(mult));

  r.isotrivial = is_isotrivial(P);
  if (pc.kind == PencilKind::TypeV || pc.kind == PencilKind::FlexType) {
    r.fibration = fibration_record(P);
    int inferred = static_cast<int>(r.fibration->kodaira_types.size() - r.fibration->fibers.size());
    if (inferred > 0) r.warnings.push_back(std::to_string(inferred) + " fiber(s) counted as I1 from a simple discriminant root");
  }
  return r;
}

ordered_json to_json(const Report& r) {
  ordered_json j;
  j["schema"] = r.schema;
  j["field"] = r.field;
  j["pencil"] = r.pencil;
  j["classification"] = r.classification;
  j["base_point"] = opt(r.base_point);
  j["flex_line"] = opt(r.flex_line);
  j["discriminant"] = {{"form", r.discriminant}, {"profile", r.profile}, {"complete", r.profile_complete}};
  ordered_json members = ordered_json::array();
  for (const auto& m : r.singular_members) {
    ordered_json sing = ordered_json::array();
    for (const auto& s : m.singularities) sing.push_back({{"point", s.point}, {"kind", s.kind}});
    members.push_back({{"param", m.param},
                       {"form", m.form},
                       {"disc_multiplicity", m.disc_multiplicity},
                       {"singularities", sing},
                       {"irreducible", m.irreducible},
                       {"irreducible_certified", m.irreducible_certified}});
  }
  j["singular_members"] = members;
  j["isotrivial"] = opt(r.isotrivial);
  if (r.fibration) {
    const auto& f = *r.fibration;
    ordered_json fibers = ordered_json::array();
    for (const auto& fb : f.fibers) {
      ordered_json comps = ordered_json::array();
      for (const auto& c : fb.components)
        comps.push_back({{"label", c.label},
                         {"multiplicity", c.multiplicity},
                         {"self_intersection", c.self_intersection},
                         {"genus", c.genus},
                         {"singularity", opt(c.singularity)}});
      fibers.push_back({{"param", fb.param}, {"kodaira", fb.kodaira}, {"components", comps}, {"adjacency", fb.adjacency}});
    }
    j["fibration"] = {{"fibers", fibers},
                      {"kodaira_types", f.kodaira_types},
                      {"euler_sum", f.euler_sum},
                      {"mw_rank", f.mw_rank},
                      {"extremal", f.extremal},
                      {"mp_label", f.mp_label},
                      {"beauville_row", opt(f.beauville_row)}};
  } else {
    j["fibration"] = nullptr;
  }
  j["warnings"] = r.warnings;
  return j;
}

Report report_from_json(const json& j) {
  try {
    if (j.at("schema").get<int>() != kReportSchema) throw Error(Errc::ParseError, "unsupported report schema");
    Report r;
    r.field = j.at("field").get<std::string>();
    r.pencil = j.at("pencil").get<std::vector<std::string>>();
    r.classification = j.at("classification").get<std::string>();
    r.base_point = opt_from<std::string>(j, "base_point");
    r.flex_line = opt_from<std::string>(j, "flex_line");
    const auto& d = j.at("discriminant");
    r.discriminant = d.at("form").get<std::string>();
    r.profile = d.at("profile").get<std::vector<int>>();
    r.profile_complete = d.at("complete").get<bool>();
    for (const auto& m : j.at("singular_members")) {
      MemberRecord rec{m.at("param").get<std::string>(), m.at("form").get<std::string>(), m.at("disc_multiplicity").get<int>(),
                       {}, m.at("irreducible").get<bool>(), m.at("irreducible_certified").get<bool>()};
      for (const auto& s : m.at("singularities")) rec.singularities.push_back({s.at("point").get<std::string>(), s.at("kind").get<std::string>()});
      r.singular_members.push_back(std::move(rec));
    }
    r.isotrivial = opt_from<bool>(j, "isotrivial");
    if (!j.at("fibration").is_null()) {
      const auto& f = j.at("fibration");
      FibrationRecord fr;
      for (const auto& fb : f.at("fibers")) {
        FiberRecord rec{fb.at("param").get<std::string>(), fb.at("kodaira").get<std::string>(), {},
                        fb.at("adjacency").get<std::vector<std::vector<int>>>()};
        for (const auto& c : fb.at("components"))
          rec.components.push_back({c.at("label").get<std::string>(), c.at("multiplicity").get<int>(),
                                    c.at("self_intersection").get<int>(), c.at("genus").get<int>(),
                                    opt_from<std::string>(c, "singularity")});
        fr.fibers.push_back(std::move(rec));
      }
      fr.kodaira_types = f.at("kodaira_types").get<std::vector<std::string>>();
      fr.euler_sum = f.at("euler_sum").get<int>();
      fr.mw_rank = f.at("mw_rank").get<int>();
      fr.extremal = f.at("extremal").get<bool>();
      fr.mp_label = f.at("mp_label").get<std::string>();
      fr.beauville_row = opt_from<std::string>(f, "beauville_row");
      r.fibration = std::move(fr);
    }
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    return r;
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("malformed report: ") + e.what());
  }
}

std::string format_report(const Report& r) {
  std::ostringstream o;
  auto list = [](const auto& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::string(v[i]);
    return s + "}";
  };
  std::vector<std::string> prof;
  for (int m : r.profile) prof.push_back(std::to_string(m));
  o << "field:          " << r.field << "\n";
  o << "pencil:         <" << r.pencil[0] << ", " << r.pencil[1] << ">\n";
  o << "classification: " << r.classification << "\n";
  if (r.base_point) o << "base point:     " << *r.base_point << "\n";
  if (r.flex_line) o << "flex line:      " << *r.flex_line << "\n";
  o << "discriminant:   " << r.discriminant << "\n";
  o << "profile:        " << list(prof) << (r.profile_complete ? "" : " (roots partly outside the field)") << "\n";
  o << "singular members:\n";
  for (const auto& m : r.singular_members) {
    o << "  " << m.param << "  " << m.form << "  [disc mult " << m.disc_multiplicity << "]";
    for (const auto& s : m.singularities) o << "  " << s.kind << " at " << s.point;
    o << (m.irreducible ? "" : "  reducible") << "\n";
  }
  if (r.isotrivial) o << "isotrivial:     " << (*r.isotrivial ? "yes" : "no") << "\n";
  if (r.fibration) {
    const auto& f = *r.fibration;
    o << "fibers:\n";
    for (const auto& fb : f.fibers) {
      o << "  " << fb.param << "  " << fb.kodaira << "  multiplicities";
      for (const auto& c : fb.components) o << " " << c.multiplicity;
      o << "\n";
    }
    o << "kodaira types:  " << list(f.kodaira_types) << "\n";
    o << "euler sum:      " << f.euler_sum << "\n";
    o << "mw rank:        " << f.mw_rank << (f.extremal ? " (extremal)" : "") << "\n";
    o << "MP label:       " << f.mp_label << "\n";
    if (f.beauville_row) o << "Beauville row:  " << *f.beauville_row << "\n";
  }
  for (const auto& w : r.warnings) o << "warning: " << w << "\n";
  return o.str();
}

}  // namespace onepoint
