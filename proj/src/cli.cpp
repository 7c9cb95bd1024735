#include "spinframe/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "spinframe/antisym.hpp"
#include "spinframe/composite.hpp"
#include "spinframe/format.hpp"
#include "spinframe/frames.hpp"
#include "spinframe/states.hpp"
#include "spinframe/wigner.hpp"

namespace spinframe::cli {

namespace {

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Vec3 parse_triple(const std::string& text, const char* what) {
    std::vector<double> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) {
            throw InputError(std::string(what) + ": cannot parse '" + text + "' as x,y,z");
        }
        parts.push_back(v);
    }
    if (parts.size() != 3) {
        throw InputError(std::string(what) + ": expected three comma-separated components");
    }
    return {parts[0], parts[1], parts[2]};
}

TwiceSpin parse_spin(int twice, const char* what) {
    if (twice < 0 || twice > MAX_TWICE_SPIN) {
        throw InputError(std::string(what) + ": 2s must lie in [0, " +
                         std::to_string(MAX_TWICE_SPIN) + "]");
    }
    return TwiceSpin{twice};
}

int parse_component(TwiceSpin s, int twice_m, const char* what) {
    if (!is_valid_component(s, twice_m)) {
        throw InputError(std::string(what) + ": 2m=" + std::to_string(twice_m) +
                         " is not a component of 2s=" + std::to_string(s.twice()));
    }
    return twice_m;
}

Sheet parse_sheet(int sheet) {
    if (sheet != 1 && sheet != -1) {
        throw InputError("--sheet must be +1 or -1");
    }
    return sheet == 1 ? Sheet::Plus : Sheet::Minus;
}

std::string triple(const Vec3& v) {
    return "(" + format_real(v.x()) + "," + format_real(v.y()) + "," + format_real(v.z()) + ")";
}

std::string quat(const UnitQuaternion& q) {
    return "(" + format_real(q.w()) + "," + format_real(q.x()) + "," + format_real(q.y()) + "," +
           format_real(q.z()) + ")";
}

void print_frame(std::ostream& out, const HelicityFrame& f) {
    out << "H_" << f.tag << " x=" << triple(f.x) << " y=" << triple(f.y) << " z=" << triple(f.z)
        << " orthonormality_residual=" << format_real(orthonormality_residual(f)) << '\n';
}

const std::string kFigurePa = "0.707106781186548,0,0.707106781186548";
const std::string kFigurePb = "-0.707106781186548,0,0.707106781186548";

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"spinframe: spin quantization frames, exchange phases and exclusion checks"};
    app.require_subcommand(1);
    std::string out_path;
    app.add_option("--out", out_path, "Write the report to this file instead of stdout");

    // dmatrix
    int dm_s2 = 1;
    std::string dm_axis = "0,0,1";
    double dm_angle = 0.0;
    auto* dmatrix = app.add_subcommand("dmatrix", "Print the Wigner D-matrix of an axis-angle rotation");
    dmatrix->add_option("--s2", dm_s2, "Twice the spin")->required();
    dmatrix->add_option("--axis", dm_axis, "Rotation axis x,y,z");
    dmatrix->add_option("--angle", dm_angle, "Rotation angle in radians, within [-4pi, 4pi]")->required();

    // exchange
    int ex_sa2 = 1, ex_sb2 = 1, ex_sheet = 1;
    int ex_ma2 = 0, ex_mb2 = 0;
    std::string ex_case;
    std::string ex_pa = kFigurePa, ex_pb = kFigurePb;
    auto* exchange = app.add_subcommand("exchange", "Exchange phase of an order-dependent two-particle description");
    exchange->add_option("--sa2", ex_sa2, "Twice the spin of particle a")->required();
    exchange->add_option("--sb2", ex_sb2, "Twice the spin of particle b")->required();
    exchange->add_option("--case", ex_case, "first (R_b = R_a.R_21) or second (R_a = R_b.R_21)")->required();
    auto* ex_ma_opt = exchange->add_option("--ma2", ex_ma2, "Twice m of particle a (default +s_a)");
    auto* ex_mb_opt = exchange->add_option("--mb2", ex_mb2, "Twice m of particle b (default +s_b)");
    exchange->add_option("--pa", ex_pa, "Momentum of particle a x,y,z");
    exchange->add_option("--pb", ex_pb, "Momentum of particle b x,y,z");
    exchange->add_option("--sheet", ex_sheet, "Sheet of R_21: +1 or -1");

    // exclusion
    int excl_s2 = 1;
    auto* exclusion = app.add_subcommand("exclusion", "Composite spins allowed for two identical particles");
    exclusion->add_option("--s2", excl_s2, "Twice the spin")->required();

    // impossibility
    int imp_n = 3;
    auto* impossibility = app.add_subcommand("impossibility", "Exhaustive check of simultaneous pair antisymmetrization");
    impossibility->add_option("--n", imp_n, "Largest particle count N_max (2..20)")->required();

    // frames
    std::string fr_pa = kFigurePa, fr_pb = kFigurePb;
    auto* frames = app.add_subcommand("frames", "Helicity frames, bisector and both sheets of R_ba");
    frames->add_option("--pa", fr_pa, "Momentum of particle a x,y,z");
    frames->add_option("--pb", fr_pb, "Momentum of particle b x,y,z");

    // state
    int st_sa2 = 1, st_sb2 = 1, st_ma2 = 0, st_mb2 = 0, st_sheet = 1;
    std::string st_qa = "q", st_qb = "q";
    std::string st_pa = kFigurePa, st_pb = kFigurePb;
    auto* state = app.add_subcommand("state", "Dump the canonical-SQF pair state of an ordered description");
    state->add_option("--sa2", st_sa2, "Twice the spin of particle a")->required();
    state->add_option("--sb2", st_sb2, "Twice the spin of particle b")->required();
    auto* st_ma_opt = state->add_option("--ma2", st_ma2, "Twice m of particle a (default +s_a)");
    auto* st_mb_opt = state->add_option("--mb2", st_mb2, "Twice m of particle b (default +s_b)");
    state->add_option("--qa", st_qa, "Intrinsic label of particle a");
    state->add_option("--qb", st_qb, "Intrinsic label of particle b");
    state->add_option("--pa", st_pa, "Momentum of particle a x,y,z");
    state->add_option("--pb", st_pb, "Momentum of particle b x,y,z");
    state->add_option("--sheet", st_sheet, "Sheet of R_21: +1 or -1");

    // composite
    int co_s2 = 1, co_ma2 = 0, co_mb2 = 0, co_sheet = 1;
    std::string co_kind = "pseudo";
    std::string co_pa = kFigurePa, co_pb = kFigurePb;
    auto* composite = app.add_subcommand("composite", "Composite-spin projection of an identical-particle pair");
    composite->add_option("--s2", co_s2, "Twice the common spin")->required();
    composite->add_option("--ma2", co_ma2, "Twice m of particle a")->required();
    composite->add_option("--mb2", co_mb2, "Twice m of particle b")->required();
    composite->add_option("--kind", co_kind, "pseudo (sum over slot assignments) or direct");
    composite->add_option("--pa", co_pa, "Momentum of particle a x,y,z");
    composite->add_option("--pb", co_pb, "Momentum of particle b x,y,z");
    composite->add_option("--sheet", co_sheet, "Sheet of R_21: +1 or -1");

    // pairsets
    int ps_n = 3, ps_s2 = 1;
    auto* pairsets = app.add_subcommand("pairsets", "Largest commuting family of subset total-spin operators");
    pairsets->add_option("--n", ps_n, "Particle count (2..4)")->required();
    pairsets->add_option("--s2", ps_s2, "Twice the spin (0 or 1)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    std::ostringstream report;
    int code = kOk;
    try {
        if (dmatrix->parsed()) {
            const TwiceSpin s = parse_spin(dm_s2, "--s2");
            const UnitQuaternion q = from_axis_angle(parse_triple(dm_axis, "--axis"), dm_angle);
            const WignerMatrix d = wigner_D(s, q);
            report << "s2=" << s.twice() << " q=" << quat(q) << '\n';
            for (const TwiceM row : m_range(s)) {
                for (const TwiceM col : m_range(s)) {
                    const Complex c = d(row, col);
                    report << row.twice() << ' ' << col.twice() << ' ' << format_real(c.real())
                           << ' ' << format_real(c.imag()) << '\n';
                }
            }
        } else if (exchange->parsed()) {
            const TwiceSpin sa = parse_spin(ex_sa2, "--sa2");
            const TwiceSpin sb = parse_spin(ex_sb2, "--sb2");
            ExchangeCase which{};
            if (ex_case == "first") {
                which = ExchangeCase::First;
            } else if (ex_case == "second") {
                which = ExchangeCase::Second;
            } else {
                throw InputError("--case must be 'first' or 'second'");
            }
            const int ma = ex_ma_opt->count() ? parse_component(sa, ex_ma2, "--ma2") : sa.twice();
            const int mb = ex_mb_opt->count() ? parse_component(sb, ex_mb2, "--mb2") : sb.twice();
            const ParticleDescriptor a("q", parse_triple(ex_pa, "--pa"), sa, ma);
            const ParticleDescriptor b("q", parse_triple(ex_pb, "--pb"), sb, mb);
            const auto d = OrderedDescription::anchored(a, b, parse_sheet(ex_sheet));
            const auto result = exchange_order_dependent(d, which);
            report << "phase=" << format_sign(result.phase)
                   << " case_discrepancy=" << format_sign(case_discrepancy(d)) << '\n';
        } else if (exclusion->parsed()) {
            const TwiceSpin s = parse_spin(excl_s2, "--s2");
            report << "allowed_S2:";
            for (const TwiceSpin S : exclusion_check(s)) {
                report << ' ' << S.twice();
            }
            report << '\n';
        } else if (impossibility->parsed()) {
            if (imp_n < 2 || imp_n > MAX_ENUMERATION_PARTICLES) {
                throw InputError("--n must lie in [2, 20]");
            }
            const auto r = impossibility_report(imp_n);
            write_report(report, r);
            code = r.claims_hold ? kOk : kClaimViolated;
        } else if (frames->parsed()) {
            const Vec3 pa = parse_triple(fr_pa, "--pa");
            const Vec3 pb = parse_triple(fr_pb, "--pb");
            const HelicityFrame ha = helicity_frame(pa, pb, "a");
            const HelicityFrame hb = helicity_frame(pb, pa, "b");
            print_frame(report, ha);
            print_frame(report, hb);
            report << "k=" << triple(bisector_axis(pa, pb)) << '\n';
            for (const Sheet sheet : {Sheet::Plus, Sheet::Minus}) {
                const UnitQuaternion r = relative_rotation(hb, ha, sheet);
                report << "R_ba(" << (sheet == Sheet::Plus ? "+pi" : "-pi") << ")=" << quat(r)
                       << " residual=" << format_real(triad_residual(r, hb, ha)) << '\n';
            }
        } else if (state->parsed()) {
            const TwiceSpin sa = parse_spin(st_sa2, "--sa2");
            const TwiceSpin sb = parse_spin(st_sb2, "--sb2");
            const int ma = st_ma_opt->count() ? parse_component(sa, st_ma2, "--ma2") : sa.twice();
            const int mb = st_mb_opt->count() ? parse_component(sb, st_mb2, "--mb2") : sb.twice();
            const ParticleDescriptor a(st_qa, parse_triple(st_pa, "--pa"), sa, ma);
            const ParticleDescriptor b(st_qb, parse_triple(st_pb, "--pb"), sb, mb);
            write_state_dump(report,
                             assemble_ordered(OrderedDescription::anchored(a, b, parse_sheet(st_sheet))));
        } else if (composite->parsed()) {
            const TwiceSpin s = parse_spin(co_s2, "--s2");
            const ParticleDescriptor a("q", parse_triple(co_pa, "--pa"), s,
                                       parse_component(s, co_ma2, "--ma2"));
            const ParticleDescriptor b("q", parse_triple(co_pb, "--pb"), s,
                                       parse_component(s, co_mb2, "--mb2"));
            const Sheet sheet = parse_sheet(co_sheet);
            PairState psi = [&] {
                if (co_kind == "pseudo") {
                    return pseudo_antisymmetrized(a, b, sheet);
                }
                if (co_kind == "direct") {
                    return assemble_ordered(OrderedDescription::anchored(a, b, sheet));
                }
                throw InputError("--kind must be 'pseudo' or 'direct'");
            }();
            write_projection(report, project_composite(psi, pseudo_antisymmetrized_route(psi)));
        } else if (pairsets->parsed()) {
            if (ps_s2 < 0) {
                throw InputError("--s2 must be non-negative");
            }
            const auto family = largest_commuting_family(ps_n, TwiceSpin{ps_s2});
            report << "max_commuting_pairset=" << family.size() << '\n';
            for (const auto& member : family.members) {
                report << "S2_{";
                for (std::size_t k = 0; k < member.size(); ++k) {
                    report << (k ? "," : "") << member[k];
                }
                report << "}\n";
            }
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const SpinframeError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    if (out_path.empty()) {
        out << report.str();
    } else {
        std::ofstream file(out_path);
        if (!file) {
            err << "error: cannot open " << out_path << " for writing\n";
            return kInputError;
        }
        file << report.str();
    }
    return code;
}

}  // namespace spinframe::cli
