#pragma once

// Resolution of the 9-fold base point by nine blow-ups and the resulting
// elliptic fibration: fibers, Kodaira types, Shioda-Tate and table lookups.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "onepoint/pencil.hpp"

namespace onepoint {

struct BlowupStep {
  bool chart_b = false;  // false: (u, v) = (u, u(w + slope)); true: (u, v) = (u v, v)
  AlgNum slope;
};

struct TrackedCurve {
  std::string name;
  Form3 form;
  std::vector<int> mult;  // multiplicity at each center
};

class Ledger {
 public:
  Ledger(const Point2& base, std::vector<BlowupStep> steps, std::vector<int> reference_intersections);

  const Point2& base_point() const { return base_; }
  std::size_t size() const { return steps_.size(); }
  const std::vector<BlowupStep>& steps() const { return steps_; }
  // I_p of the two reference members after 0, 1, ..., n steps.
  const std::vector<int>& reference_intersections() const { return ref_; }

  void track(const std::string& name, const Form3& form);
  bool has(const std::string& name) const { return curves_.count(name) > 0; }
  const TrackedCurve& curve(const std::string& name) const;  // UnknownCurve
  const std::map<std::string, TrackedCurve>& curves() const { return curves_; }

  // Multiplicities of a plane curve at the centers, by replaying the blow-ups.
  std::vector<int> multiplicities(const Form3& f) const;
  // proximate(j, i): center j lies on the strict transform of the exceptional curve of step i (j > i).
  bool proximate(std::size_t j, std::size_t i) const { return prox_[j][i]; }

 private:
  std::vector<int> replay(MPoly local, std::size_t start) const;

  Point2 base_;
  std::vector<BlowupStep> steps_;
  std::vector<int> ref_;
  std::vector<std::vector<bool>> prox_;
  std::map<std::string, TrackedCurve> curves_;
};

// Registered curves: "gen0", "gen1", "C" and "C'" (reference smooth members),
// "L" (tangent line at p), "D'" (member singular at p, when one exists),
// and for flex pencils "l" and "3l".
Ledger resolve_base_point(const Pencil& P);

struct TransformNumbers {
  int strict_intersection = 0;  // (A~ . B~)
  int self_a = 0, self_b = 0;   // (A~)^2, (B~)^2
};
// Using the first `steps` centers (all when negative).
TransformNumbers transform_numbers(const Ledger& l, const std::string& a, const std::string& b, int steps = -1);
// I_p(A, B) minus the contributions of the first k centers, for k = 0..n.
std::vector<int> local_intersection_sequence(const Ledger& l, const std::string& a, const std::string& b);
// Coefficients c_k of the exceptional curves in the total transform of a tracked curve.
std::vector<int> total_transform(const Ledger& l, const std::string& name);

struct FiberComponent {
  std::string label;  // "M" for plane components (with index), "E<k>" for exceptional curves
  int multiplicity = 1;
  int self_intersection = 0;
  int genus = 0;  // arithmetic genus
  std::optional<SingKind> singularity;  // singular point of a genus-1 plane component
};
struct FiberConfig {
  Param param;
  std::vector<FiberComponent> components;
  std::vector<std::vector<int>> adjacency;  // intersection numbers, zero diagonal
};
FiberConfig fiber_config(const Pencil& P, const Ledger& l, const Param& param);

struct KodairaType {
  enum Tag { I, II, IIstar, Unknown } tag = Unknown;
  int n = 0;  // for I_n
  std::string to_string() const;
  bool operator==(const KodairaType& o) const { return tag == o.tag && (tag != I || n == o.n); }
};
KodairaType kodaira_type(const FiberConfig& fc);
std::optional<int> euler_number(const KodairaType& k);

constexpr int kRationalEllipticRho = 10;  // Picard number of a rational elliptic surface

struct ShiodaTate {
  int mw_rank = 0;
  bool extremal = false;
};
ShiodaTate shioda_tate_rank(int rho, const std::vector<FiberConfig>& fibers);

enum class MPLabel { X_1119, X_211, X_22, Other };
const char* mp_label_name(MPLabel l);
MPLabel mp_label(const std::vector<KodairaType>& fibers);
// Row F1..F6 of the table of semistable extremal families with four singular fibers.
std::optional<std::string> beauville_row(std::vector<int> component_counts);

// The conic with contact >= 5 with the smooth cubic c at p.
Form3 osculating_conic(const Cubic& c, const Point2& p);

struct FibrationReport {
  Ledger ledger;
  std::vector<FiberConfig> fibers;  // over the resolved singular parameters
  std::vector<KodairaType> types;   // of `fibers`, then one I1 per inferred_nodal
  int inferred_nodal = 0;           // unresolved simple discriminant roots
  Profile unresolved;               // unresolved roots of higher multiplicity
  int euler_sum = 0;
  ShiodaTate st;
  MPLabel label = MPLabel::Other;
  std::optional<std::string> beauville;
};
// Fibers over the resolved singular parameters. A simple root of the
// discriminant outside the field is counted as I1 (Euler number 1).
FibrationReport analyze_fibration(const Pencil& P);

}  // namespace onepoint
