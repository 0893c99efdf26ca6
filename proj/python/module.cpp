#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jpotapov/verify.hpp"
#include "jpotapov/weyl.hpp"

#include <sstream>

namespace py = pybind11;
using namespace jp;

namespace {

using PyMatrix = std::vector<std::vector<Complex>>;

CMatrix to_cmatrix(const PyMatrix& rows) {
    if (rows.empty() || rows[0].empty()) throw InvalidParam("matrix must be nonempty");
    CMatrix out(static_cast<Eigen::Index>(rows.size()),
                static_cast<Eigen::Index>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) throw InvalidParam("ragged matrix");
        for (size_t j = 0; j < rows[i].size(); ++j) {
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
        }
    }
    return out;
}

PyMatrix from_cmatrix(const CMatrix& m) {
    PyMatrix out(static_cast<size_t>(m.rows()),
                 std::vector<Complex>(static_cast<size_t>(m.cols())));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            out[static_cast<size_t>(i)][static_cast<size_t>(j)] = m(i, j);
        }
    }
    return out;
}

std::vector<PyMatrix> from_cmatrices(const std::vector<CMatrix>& ms) {
    std::vector<PyMatrix> out;
    out.reserve(ms.size());
    for (const CMatrix& m : ms) out.push_back(from_cmatrix(m));
    return out;
}

SignatureMatrix make_signature(const std::vector<int>& signs) {
    return SignatureMatrix::diagonal(signs);
}

PotapovSeq make_seq(const std::vector<int>& signs, const std::vector<PyMatrix>& coeffs) {
    std::vector<CMatrix> cs;
    cs.reserve(coeffs.size());
    for (const PyMatrix& c : coeffs) cs.push_back(to_cmatrix(c));
    return PotapovSeq(make_signature(signs), std::move(cs));
}

SchurParam make_param(const py::object& spec, int m) {
    if (spec.is_none()) return SchurParam::zero(m);
    // a single matrix is a constant parameter, a list of matrices is a
    // polynomial one
    auto outer = spec.cast<py::list>();
    if (outer.empty()) throw InvalidParam("empty parameter");
    py::list first = outer[0].cast<py::list>();
    if (!first.empty() && py::isinstance<py::list>(first[0])) {
        std::vector<CMatrix> cs;
        for (const auto& item : outer) cs.push_back(to_cmatrix(item.cast<PyMatrix>()));
        return SchurParam::poly(MatrixPoly(std::move(cs)));
    }
    return SchurParam::constant(to_cmatrix(spec.cast<PyMatrix>()));
}

}  // namespace

PYBIND11_MODULE(_jpotapov, mod) {
    mod.doc() = "Caratheodory-type interpolation for J-Potapov functions";

    py::register_exception<Error>(mod, "JPotapovError");

    py::enum_<Classification>(mod, "Classification")
        .value("strict", Classification::Strict)
        .value("degenerate", Classification::Degenerate)
        .value("invalid", Classification::Invalid);

    py::class_<PotapovSeq>(mod, "Sequence")
        .def(py::init(&make_seq), py::arg("j_signs"), py::arg("coeffs"))
        .def_property_readonly("m", &PotapovSeq::dim)
        .def_property_readonly("order", &PotapovSeq::order)
        .def("classification", &PotapovSeq::classification)
        .def("coeffs", [](const PotapovSeq& s) { return from_cmatrices(s.coeffs()); })
        .def("toeplitz", [](const PotapovSeq& s) { return from_cmatrix(s.toeplitz()); })
        .def("ball",
             [](const PotapovSeq& s) {
                 const BallParams& bp = s.ball();
                 py::dict out;
                 out["M"] = from_cmatrix(bp.M);
                 out["L"] = from_cmatrix(bp.L);
                 out["R"] = from_cmatrix(bp.R);
                 return out;
             })
        .def("extend_central",
             [](const PotapovSeq& s, int k) { return extend_central(s, k); }, py::arg("k") = 1)
        .def("extend",
             [](const PotapovSeq& s, const PyMatrix& k) {
                 return extend_with_parameter(s, to_cmatrix(k));
             })
        .def("pg_transform", [](const PotapovSeq& s) { return pg_transform_seq(s); })
        .def("__repr__", [](const PotapovSeq& s) {
            std::ostringstream os;
            os << "Sequence(m=" << s.dim() << ", order=" << s.order() << ", "
               << to_string(s.classification()) << ")";
            return os.str();
        });

    py::class_<RationalMatrixFn>(mod, "RationalFn")
        .def("__call__", [](const RationalMatrixFn& f, Complex w) { return from_cmatrix(f(w)); })
        .def("taylor",
             [](const RationalMatrixFn& f, int k) { return from_cmatrices(taylor_coeffs(f, k)); })
        .def_property_readonly(
            "num_coeffs",
            [](const RationalMatrixFn& f) { return from_cmatrices(f.num.coeffs()); })
        .def_property_readonly("den_coeffs", [](const RationalMatrixFn& f) {
            return from_cmatrices(f.den.coeffs());
        });

    py::class_<WeylBall>(mod, "WeylBall")
        .def_property_readonly("center", [](const WeylBall& b) { return from_cmatrix(b.center); })
        .def_property_readonly("l_raw", [](const WeylBall& b) { return from_cmatrix(b.l_raw); })
        .def_property_readonly("r_raw", [](const WeylBall& b) { return from_cmatrix(b.r_raw); })
        .def_property_readonly("l_norm", [](const WeylBall& b) { return from_cmatrix(b.l_norm); })
        .def_property_readonly("r_half", [](const WeylBall& b) { return from_cmatrix(b.r_half); })
        .def("membership", [](const WeylBall& b, const PyMatrix& x) {
            return ball_membership(b, to_cmatrix(x));
        });

    mod.def(
        "random_strict_seq",
        [](int m, const std::vector<int>& signs, int n, std::uint64_t seed, double margin) {
            return random_strict_seq(m, make_signature(signs), n, seed, margin);
        },
        py::arg("m"), py::arg("j_signs"), py::arg("n"), py::arg("seed"), py::arg("margin") = 0.5);

    mod.def("central_function", [](const PotapovSeq& s) { return central_function(s).left; });

    mod.def(
        "solve",
        [](const PotapovSeq& s, const py::object& param) {
            return lft_solution(s, make_param(param, s.dim())).left;
        },
        py::arg("seq"), py::arg("param") = py::none());

    mod.def("unique", [](const PotapovSeq& s) { return uniqueness(s).unique; });

    mod.def("r0", [](const PotapovSeq& s) { return r0(s); });

    mod.def("in_common_holomorphy",
            [](const PotapovSeq& s, Complex w) { return in_common_holomorphy(s, w); });

    mod.def("weyl_ball", [](const PotapovSeq& s, Complex w) { return weyl_ball(s, w); });

    mod.def(
        "limit_table",
        [](const PotapovSeq& tower, Complex w, int n_max) {
            const LimitTable t = limit_study(tower, w, n_max);
            py::list rows;
            for (const LimitRow& r : t.rows) {
                py::dict row;
                row["order"] = r.order;
                row["M"] = from_cmatrix(r.center);
                row["L"] = from_cmatrix(r.l_raw);
                row["R"] = from_cmatrix(r.r_raw);
                row["rank_L"] = r.rank_l;
                row["rank_R"] = r.rank_r;
                rows.append(row);
            }
            return rows;
        },
        py::arg("tower"), py::arg("w"), py::arg("n_max"));

    mod.def("verify", [](std::uint64_t seed, int count) {
        std::ostringstream os;
        const bool ok = run_verification(seed, count, os);
        return py::make_tuple(ok, os.str());
    });
}
