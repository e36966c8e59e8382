#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kli/analysis.hpp"
#include "kli/curve.hpp"
#include "kli/errors.hpp"
#include "kli/flow.hpp"
#include "kli/quaternion.hpp"

// Text formats shared by the interp CLI. Quaternions are always written and
// read in w,x,y,z order; reals use '.' as decimal separator regardless of
// the process locale.
namespace kli::io {

class ParseError : public InputError {
public:
    explicit ParseError(const std::string& what) : InputError(what) {}
};

struct QuaternionPair {
    UnitQuaternion p;
    UnitQuaternion r;
};

/// Shortest decimal rendering with up to 17 significant digits ("%.17g").
std::string format_real(double v);

/// Strict, locale-independent parse of one real.
double parse_real(std::string_view text);

/// Comma-separated list of reals, e.g. "0.2,0.4,1.2".
std::vector<double> parse_real_list(std::string_view text);

/// Exactly four comma-separated reals, w,x,y,z.
Quaternion parse_quaternion(std::string_view text);

/// Pair file: one "pw,px,py,pz,rw,rx,ry,rz" line per pair; blank lines and
/// lines starting with '#' are skipped. Errors name the offending line.
std::vector<QuaternionPair> read_pairs(std::istream& in);
std::vector<QuaternionPair> read_pairs(const std::filesystem::path& path);

/// Header "t,w,x,y,z" (plus ",hx,hy,hz" with hopf), LF line endings.
void write_curve_csv(std::ostream& out, const InterpolationCurve& curve, bool hopf);

/// JSON mirror of the CSV columns plus converged_time, target and, when
/// given, the configuration that produced the curve.
void write_curve_json(std::ostream& out, const InterpolationCurve& curve, bool hopf,
                      const std::optional<KliConfig>& cfg, std::string_view method);

/// Reads back the samples, converged_time and target written by write_curve_json.
InterpolationCurve read_curve_json(std::istream& in);

void write_frames_csv(std::ostream& out, const std::vector<Frame>& frames);
void write_frames_json(std::ostream& out, const std::vector<Frame>& frames);

void write_comparison_json(std::ostream& out, const std::vector<PathComparison>& comparisons);

}  // namespace kli::io
