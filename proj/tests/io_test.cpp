#include <gtest/gtest.h>

#include <locale>
#include <sstream>

#include "kli/flow.hpp"
#include "kli/io.hpp"
#include "kli/slerp.hpp"
#include "oracles.hpp"

using namespace kli;

TEST(FormatReal, Rendering) {
    EXPECT_EQ(io::format_real(0.0), "0");
    EXPECT_EQ(io::format_real(-1.0), "-1");
    EXPECT_EQ(io::format_real(11.66), "11.66");
    EXPECT_EQ(io::format_real(0.1), "0.10000000000000001");
    EXPECT_EQ(io::format_real(1e-20), "9.9999999999999995e-21");
    EXPECT_EQ(io::format_real(1e21), "1e+21");
}

TEST(FormatReal, RoundTripsThroughParse) {
    oracle::Rng rng(60);
    for (int i = 0; i < 1000; ++i) {
        const double v = rng.uniform(-1, 1) * std::pow(10.0, rng.uniform(-30, 30));
        EXPECT_EQ(io::parse_real(io::format_real(v)), v);
    }
}

TEST(ParseReal, Rejects) {
    EXPECT_THROW(io::parse_real(""), io::ParseError);
    EXPECT_THROW(io::parse_real("1,5"), io::ParseError);
    EXPECT_THROW(io::parse_real("abc"), io::ParseError);
    EXPECT_THROW(io::parse_real("inf"), io::ParseError);
    EXPECT_THROW(io::parse_real("nan"), io::ParseError);
    EXPECT_EQ(io::parse_real(" +0.5 "), 0.5);
}

TEST(ParseQuaternion, FourComponents) {
    EXPECT_EQ(io::parse_quaternion("0.5,0.5,0.5,0.5"), (Quaternion{0.5, 0.5, 0.5, 0.5}));
    EXPECT_THROW(io::parse_quaternion("0,0,1"), io::ParseError);
    EXPECT_THROW(io::parse_quaternion("0,0,0,1,0"), io::ParseError);
}

TEST(ReadPairs, ReferencePair) {
    std::istringstream in("# reference pair\n0,0,0,1,0.5,0.5,0.5,0.5\n\n");
    const auto pairs = io::read_pairs(in);
    ASSERT_EQ(pairs.size(), 1u);
    EXPECT_EQ(pairs[0].p.value(), (Quaternion{0, 0, 0, 1}));
    EXPECT_EQ(pairs[0].r.value(), (Quaternion{0.5, 0.5, 0.5, 0.5}));
}

TEST(ReadPairs, EmptyFile) {
    std::istringstream in("");
    EXPECT_TRUE(io::read_pairs(in).empty());
}

TEST(ReadPairs, RenormalizesWithinTolerance) {
    std::istringstream in("0,0,0,1.0000001,0.5,0.5,0.5,0.5\n");
    const auto pairs = io::read_pairs(in);
    EXPECT_NEAR(norm(pairs[0].p.value()), 1.0, 1e-15);
}

TEST(ReadPairs, ErrorsNameTheLine) {
    auto message = [](const std::string& text) {
        std::istringstream in(text);
        try {
            io::read_pairs(in);
        } catch (const io::ParseError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    const auto non_unit = message("0,0,0,1,0.5,0.5,0.5,0.5\n# c\n0,0,0,0.5,1,0,0,0\n");
    EXPECT_NE(non_unit.find("line 3"), std::string::npos) << non_unit;
    EXPECT_NE(non_unit.find("not unit"), std::string::npos) << non_unit;
    EXPECT_NE(message("0,0,0,1,0.5,0.5,0.5\n").find("line 1"), std::string::npos);
    EXPECT_NE(message("0,0,0,1,x,0.5,0.5,0.5\n").find("line 1"), std::string::npos);
}

TEST(WriteCurveCsv, HeaderAndFirstRow) {
    const auto curve = kli_interpolate(UnitQuaternion::from(0, 0, 0, 1), UnitQuaternion::from(0.5, 0.5, 0.5, 0.5));
    std::ostringstream plain;
    io::write_curve_csv(plain, curve, false);
    EXPECT_EQ(plain.str().substr(0, plain.str().find('\n')), "t,w,x,y,z");

    std::ostringstream hopf;
    io::write_curve_csv(hopf, curve, true);
    std::istringstream lines(hopf.str());
    std::string header, first;
    std::getline(lines, header);
    std::getline(lines, first);
    EXPECT_EQ(header, "t,w,x,y,z,hx,hy,hz");
    EXPECT_EQ(first, "0,0,0,0,1,-1,0,0");
    EXPECT_EQ(hopf.str().find('\r'), std::string::npos);
}

namespace {

struct CommaDecimal : std::numpunct<char> {
    char do_decimal_point() const override { return ','; }
    char do_thousands_sep() const override { return '.'; }
    std::string do_grouping() const override { return "\1"; }
};

}  // namespace

TEST(WriteCurveCsv, IgnoresStreamLocale) {
    const auto p = UnitQuaternion::from(0, 0, 0, 1);
    const auto r = UnitQuaternion::from(0.5, 0.5, 0.5, 0.5);
    const auto curve = slerp_sample(p, r, 3);
    std::ostringstream expected;
    io::write_curve_csv(expected, curve, true);

    std::ostringstream localized;
    localized.imbue(std::locale(std::locale::classic(), new CommaDecimal));
    io::write_curve_csv(localized, curve, true);
    EXPECT_EQ(localized.str(), expected.str());
    EXPECT_NE(expected.str().find("0.5,"), std::string::npos);

    const std::vector<double> times{0, 0.2};
    const auto frames = generate_frames(p, r, times, unit_cube_corners());
    std::ostringstream f1, f2;
    f2.imbue(std::locale(std::locale::classic(), new CommaDecimal));
    io::write_frames_csv(f1, frames);
    io::write_frames_csv(f2, frames);
    EXPECT_EQ(f1.str(), f2.str());
}

TEST(CurveJson, RoundTripIsBitwise) {
    oracle::Rng rng(61);
    const auto [p, r] = rng.pair_with_dot(-0.5, 0.9);
    const KliConfig cfg(1e-6, 0.05, 0.01, 50);
    const auto curve = kli_interpolate(p, r, cfg);
    std::stringstream buf;
    io::write_curve_json(buf, curve, true, cfg, "kli");
    const auto back = io::read_curve_json(buf);
    EXPECT_EQ(back.converged_time, curve.converged_time);
    EXPECT_EQ(back.target, curve.target);
    ASSERT_EQ(back.samples.size(), curve.samples.size());
    for (std::size_t k = 0; k < curve.samples.size(); ++k) {
        EXPECT_EQ(back.samples[k].t, curve.samples[k].t);
        EXPECT_EQ(back.samples[k].q.value(), curve.samples[k].q.value());
    }
}

TEST(CurveJson, CarriesConfigAndHopf) {
    const auto curve = slerp_sample(UnitQuaternion::from(0, 0, 0, 1), UnitQuaternion::from(0.5, 0.5, 0.5, 0.5), 3);
    std::ostringstream out;
    io::write_curve_json(out, curve, true, KliConfig{}, "slerp");
    const auto text = out.str();
    EXPECT_NE(text.find("\"config\""), std::string::npos);
    EXPECT_NE(text.find("\"hx\""), std::string::npos);
    EXPECT_NE(text.find("\"converged_time\""), std::string::npos);

    std::istringstream bad("{\"samples\": []}");
    EXPECT_THROW(io::read_curve_json(bad), io::ParseError);
}
