// Python bindings for the strands algebra core. Mirrors the C++ surface:
// contexts and idempotent states, both algebras with their differentials and
// gradings, the quiver-to-strands morphism, piece homology, text round-trip,
// and the verification suites.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "strands/algebra.hpp"
#include "strands/grading.hpp"
#include "strands/istates.hpp"
#include "strands/osz.hpp"
#include "strands/phi.hpp"
#include "strands/splitting.hpp"
#include "strands/textio.hpp"
#include "strands/verify.hpp"

namespace py = pybind11;
using namespace strands;

namespace {

std::vector<int> bit_members(std::uint32_t bits, int n) {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if ((bits >> i) & 1u) out.push_back(i);
  return out;
}

std::vector<std::pair<int, int>> column_pairs(const StrandsGenerator& g) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= g.ctx.n; ++i) out.emplace_back(g.p[i], g.q[i]);
  return out;
}

GeneratorLabel label_from(const std::string& kind, int index) {
  GeneratorLabel l;
  if (kind == "R")
    l.kind = LabelKind::R;
  else if (kind == "L")
    l.kind = LabelKind::L;
  else if (kind == "U")
    l.kind = LabelKind::U;
  else if (kind == "C")
    l.kind = LabelKind::C;
  else
    throw ParameterError("label kind must be one of R, L, U, C");
  l.index = index;
  return l;
}

std::string kind_str(LabelKind k) {
  switch (k) {
    case LabelKind::R: return "R";
    case LabelKind::L: return "L";
    case LabelKind::U: return "U";
    case LabelKind::C: return "C";
  }
  return "?";
}

IntervalKind interval_kind_from(const std::string& name) {
  if (name == "generating") return IntervalKind::generating;
  if (name == "left_edge") return IntervalKind::left_edge;
  if (name == "right_edge") return IntervalKind::right_edge;
  if (name == "two_faced") return IntervalKind::two_faced;
  throw ParameterError(
      "interval kind must be generating, left_edge, right_edge or two_faced");
}

std::string interval_kind_str(IntervalKind k) {
  switch (k) {
    case IntervalKind::generating: return "generating";
    case IntervalKind::left_edge: return "left_edge";
    case IntervalKind::right_edge: return "right_edge";
    case IntervalKind::two_faced: return "two_faced";
  }
  return "?";
}

SuiteOptions suite_options(int max_n, Half2 cap2, int jobs,
                           std::uint64_t seed, std::size_t random_triples) {
  SuiteOptions opt;
  opt.max_n = max_n;
  opt.cap2 = cap2;
  opt.jobs = jobs;
  opt.seed = seed;
  opt.random_triples = random_triples;
  return opt;
}

}  // namespace

PYBIND11_MODULE(_strands, m) {
  m.doc() = "strands algebra core bindings";

  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError",
                                           PyExc_RuntimeError);
  py::register_exception<UnsupportedError>(m, "UnsupportedError",
                                           PyExc_NotImplementedError);

  // These two carry a payload (condition number / byte offset), so they get
  // hand-rolled translators that attach it as an attribute.
  static py::exception<ValidityError> exc_validity(m, "ValidityError",
                                                   PyExc_ValueError);
  static py::exception<GrammarError> exc_grammar(m, "GrammarError",
                                                 PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ValidityError& e) {
      py::object cls = exc_validity;
      py::object inst = cls(e.what());
      inst.attr("condition") = e.condition;
      PyErr_SetObject(cls.ptr(), inst.ptr());
    } catch (const GrammarError& e) {
      py::object cls = exc_grammar;
      py::object inst = cls(e.what());
      inst.attr("position") = e.position;
      PyErr_SetObject(cls.ptr(), inst.ptr());
    }
  });

  // --- states and contexts ---

  py::class_<IState>(m, "IState")
      .def(py::init([](int n, const std::vector<int>& members) {
             return make_istate(n, members);
           }),
           py::arg("n"), py::arg("members"))
      .def_readonly("n", &IState::n)
      .def_property_readonly("members", &IState::members)
      .def("contains", &IState::contains)
      .def("is_full", &IState::is_full)
      .def("__len__", &IState::k)
      .def("__eq__", [](const IState& a, const IState& b) { return a == b; },
           py::is_operator())
      .def("__lt__", [](const IState& a, const IState& b) { return a < b; },
           py::is_operator())
      .def("__hash__",
           [](const IState& x) {
             return py::hash(py::make_tuple(x.n, x.bits));
           })
      .def("__repr__", [](const IState& x) { return istate_str(x); });

  py::class_<AlgebraContext>(m, "AlgebraContext")
      .def(py::init(&make_context), py::arg("n"), py::arg("k"),
           py::arg("s") = std::vector<int>{})
      .def_readonly("n", &AlgebraContext::n)
      .def_readonly("k", &AlgebraContext::k)
      .def_property_readonly("s", &AlgebraContext::s_members)
      .def("__eq__",
           [](const AlgebraContext& a, const AlgebraContext& b) {
             return a == b;
           },
           py::is_operator())
      .def("__hash__",
           [](const AlgebraContext& c) {
             return py::hash(py::make_tuple(c.n, c.k, c.s_bits));
           })
      .def("__repr__", [](const AlgebraContext& c) {
        std::ostringstream os;
        os << "AlgebraContext(n=" << c.n << ", k=" << c.k << ", s=[";
        auto s = c.s_members();
        for (std::size_t i = 0; i < s.size(); ++i)
          os << (i ? ", " : "") << s[i];
        os << "])";
        return os.str();
      });

  py::class_<Interval>(m, "Interval")
      .def_readonly("lo", &Interval::lo)
      .def_readonly("hi", &Interval::hi)
      .def("__repr__", [](const Interval& i) {
        return "[" + std::to_string(i.lo) + "," + std::to_string(i.hi) + "]";
      });

  py::class_<GeneratorLabel>(m, "GeneratorLabel")
      .def(py::init(&label_from), py::arg("kind"), py::arg("index"))
      .def_property_readonly(
          "kind", [](const GeneratorLabel& l) { return kind_str(l.kind); })
      .def_readonly("index", &GeneratorLabel::index)
      .def("__repr__", [](const GeneratorLabel& l) { return label_str(l); });

  m.def("enumerate_istates", &enumerate_istates, py::arg("n"), py::arg("k"));
  m.def("weight_v", &weight_v, py::arg("x"), py::arg("y"), py::arg("i"),
        "Doubled signed line weight v_i(x, y).");
  m.def("is_far", &is_far, py::arg("x"), py::arg("y"));
  m.def("gamma_path", &gamma_path, py::arg("x"), py::arg("y"),
        "Letters of the canonical minimal path from x to y.");

  // --- strands algebra ---

  py::class_<GradingVector>(m, "GradingVector")
      .def_readonly("maslov", &GradingVector::maslov)
      .def_readonly("w_un", &GradingVector::w_un)
      .def_readonly("w", &GradingVector::w, "Doubled refined weights.")
      .def_readonly("alexander", &GradingVector::alexander,
                    "Doubled Alexander grading.")
      .def("__repr__", [](const GradingVector& g) {
        std::ostringstream os;
        os << "m=" << g.maslov << " w=(";
        for (std::size_t i = 0; i < g.w.size(); ++i)
          os << (i ? "," : "") << half2_str(g.w[i]);
        os << ") a=" << half2_str(g.alexander);
        return os.str();
      });

  py::class_<StrandsGenerator>(m, "StrandsGenerator")
      .def_readonly("ctx", &StrandsGenerator::ctx)
      .def_readonly("x", &StrandsGenerator::x)
      .def_property_readonly(
          "c",
          [](const StrandsGenerator& g) {
            return bit_members(g.c_bits, g.ctx.n);
          })
      .def_property_readonly("pq", &column_pairs,
                             "Column speeds [(p_i, q_i)] for i = 1..n.")
      .def("validate", &validate_generator,
           "Checks the six basis conditions; returns the right idempotent.")
      .def("__eq__",
           [](const StrandsGenerator& a, const StrandsGenerator& b) {
             return a == b;
           },
           py::is_operator())
      .def("__hash__",
           [](const StrandsGenerator& g) {
             return py::hash(py::str(format_generator(g)));
           })
      .def("__repr__",
           [](const StrandsGenerator& g) { return format_generator(g); });

  py::class_<F2Element>(m, "F2Element")
      .def_readonly("ctx", &F2Element::ctx)
      .def_readonly("terms", &F2Element::terms)
      .def("is_zero", &F2Element::is_zero)
      .def("__add__", &add, py::is_operator())
      .def("__mul__",
           [](const F2Element& a, const F2Element& b) { return mul(a, b); },
           py::is_operator())
      .def("__eq__",
           [](const F2Element& a, const F2Element& b) { return a == b; },
           py::is_operator())
      .def("__repr__",
           [](const F2Element& e) { return format_element(e); });

  m.def("make_generator", &make_generator, py::arg("ctx"), py::arg("x"),
        py::arg("c"), py::arg("pq"));
  m.def("idempotent", &idempotent, py::arg("ctx"), py::arg("x"));
  m.def("zero_element", &zero_element, py::arg("ctx"));
  m.def("single", &single, py::arg("g"));
  m.def("mul_gen", &mul_gen, py::arg("a"), py::arg("b"),
        "Basis product; None when it vanishes.");
  m.def("diff", &diff, py::arg("a"));
  m.def("diff_gen", &diff_gen, py::arg("g"));
  m.def("grade", &grade, py::arg("g"));
  m.def("g_min", &g_min, py::arg("ctx"), py::arg("x"), py::arg("y"),
        "Minimally winding basis element from x to y.");
  m.def("rho", &rho, py::arg("g"), "Height reflection.");
  m.def("o_sym", &o_sym, py::arg("g"), "Opposite-algebra involution.");
  m.def("enumerate_basis",
        py::overload_cast<const AlgebraContext&, IState, IState, Half2>(
            &enumerate_basis),
        py::arg("ctx"), py::arg("x"), py::arg("y"), py::arg("cap"),
        "All generators from x to y with doubled weight at most cap per line.");
  m.def("enumerate_basis",
        py::overload_cast<const AlgebraContext&, IState, IState,
                          const std::vector<Half2>&>(&enumerate_basis),
        py::arg("ctx"), py::arg("x"), py::arg("y"), py::arg("caps"));

  // --- quiver normal forms ---

  py::class_<OSGenerator>(m, "OSGenerator")
      .def_readonly("ctx", &OSGenerator::ctx)
      .def_readonly("x", &OSGenerator::x)
      .def_readonly("y", &OSGenerator::y)
      .def_property_readonly(
          "c",
          [](const OSGenerator& g) { return bit_members(g.c_bits, g.ctx.n); })
      .def_readonly("r", &OSGenerator::r, "U_i exponents, r[i-1] for line i.")
      .def("validate", &validate_os)
      .def("__eq__",
           [](const OSGenerator& a, const OSGenerator& b) { return a == b; },
           py::is_operator())
      .def("__hash__",
           [](const OSGenerator& g) {
             return py::hash(py::str(format_os_generator(g)));
           })
      .def("__repr__",
           [](const OSGenerator& g) { return format_os_generator(g); });

  py::class_<OSElement>(m, "OSElement")
      .def_readonly("ctx", &OSElement::ctx)
      .def_readonly("terms", &OSElement::terms)
      .def("is_zero", &OSElement::is_zero)
      .def("__add__", &add_os, py::is_operator())
      .def("__mul__",
           [](const OSElement& a, const OSElement& b) { return mul_os(a, b); },
           py::is_operator())
      .def("__eq__",
           [](const OSElement& a, const OSElement& b) { return a == b; },
           py::is_operator())
      .def("__repr__",
           [](const OSElement& e) { return format_os_element(e); });

  m.def("make_os_generator", &make_os_generator, py::arg("ctx"), py::arg("x"),
        py::arg("y"), py::arg("c"), py::arg("r"));
  m.def("idempotent_os", &idempotent_os, py::arg("ctx"), py::arg("x"));
  m.def("gamma_generator", &gamma_generator, py::arg("ctx"), py::arg("x"),
        py::arg("y"), "Class of the canonical path: r = 0, c empty.");
  m.def("zero_os", &zero_os, py::arg("ctx"));
  m.def("single_os", &single_os, py::arg("g"));
  m.def("dividing_interval", &dividing_interval, py::arg("x"), py::arg("y"),
        py::arg("r"),
        "Generating interval whose monomial divides U^r, if any.");
  m.def("apply_letter", &apply_letter, py::arg("e"), py::arg("label"));
  m.def("evaluate_path", &evaluate_path, py::arg("ctx"), py::arg("x"),
        py::arg("labels"));
  m.def("diff_os", &diff_os, py::arg("e"));
  m.def("grade_os", &grade_os, py::arg("g"));
  m.def("rho_os", &rho_os, py::arg("g"));
  m.def("o_os", &o_os, py::arg("g"));
  m.def("enumerate_os_basis",
        py::overload_cast<const AlgebraContext&, IState, IState, Half2>(
            &enumerate_os_basis),
        py::arg("ctx"), py::arg("x"), py::arg("y"), py::arg("cap"));
  m.def("enumerate_os_basis",
        py::overload_cast<const AlgebraContext&, IState, IState,
                          const std::vector<Half2>&>(&enumerate_os_basis),
        py::arg("ctx"), py::arg("x"), py::arg("y"), py::arg("caps"));

  // --- refined grading group ---

  py::class_<HomologyClass>(m, "HomologyClass")
      .def(py::init([](const std::vector<int>& coeff) {
             if (coeff.size() % 2 != 0)
               throw ParameterError(
                   "coefficient list must interleave (tau_i, beta_i)");
             HomologyClass a;
             a.coeff = coeff;
             return a;
           }),
           py::arg("coeff"))
      .def_readonly("coeff", &HomologyClass::coeff)
      .def("tau", [](const HomologyClass& a, int i) { return a.tau(i); })
      .def("beta", [](const HomologyClass& a, int i) { return a.beta(i); })
      .def("__add__", &add_classes, py::is_operator())
      .def("__eq__",
           [](const HomologyClass& a, const HomologyClass& b) {
             return a == b;
           },
           py::is_operator());

  py::class_<GPrimeElement>(m, "GPrimeElement")
      .def_readonly("j2", &GPrimeElement::j2, "Doubled first component.")
      .def_readonly("alpha", &GPrimeElement::alpha)
      .def("__mul__", &gprime_mul, py::is_operator())
      .def("__eq__",
           [](const GPrimeElement& a, const GPrimeElement& b) {
             return a == b;
           },
           py::is_operator());

  m.def("zero_class", &zero_class, py::arg("n"));
  m.def("multiplicity", &multiplicity, py::arg("alpha"), py::arg("i"),
        py::arg("sign"));
  m.def("linking", &linking, py::arg("a1"), py::arg("a2"));
  m.def("epsilon", &epsilon, py::arg("alpha"));
  m.def("make_gprime", &make_gprime, py::arg("j2"), py::arg("alpha"));
  m.def("gprime_identity", &gprime_identity, py::arg("n"));
  m.def("deg_prime", &deg_prime, py::arg("g"));
  m.def("theta", &theta, py::arg("ctx"), py::arg("g"),
        "Collapse to the unrefined pair (maslov, class).");
  m.def("psi_refine", &psi_refine, py::arg("graded"),
        "Collapse a theta pair to (maslov, doubled refined weights).");

  // --- morphism, piece homology, verification ---

  py::class_<CheckReport>(m, "CheckReport")
      .def_readonly("checked", &CheckReport::checked)
      .def_readonly("failures", &CheckReport::failures)
      .def("ok", &CheckReport::ok)
      .def("__repr__", [](const CheckReport& r) {
        return "CheckReport(checked=" + std::to_string(r.checked) +
               ", failures=" + std::to_string(r.failures.size()) + ")";
      });

  m.def("phi", &phi_basis, py::arg("g"),
        "Image of a normal form in the strands algebra.");
  m.def("phi_elem", &phi_elem, py::arg("e"));
  m.def("phi_closed_form", &phi_closed_form, py::arg("g"));
  m.def("relation_check", &relation_check, py::arg("n"), py::arg("k"),
        py::arg("s"));

  m.def(
      "homology_dims",
      [](const std::string& algebra, const AlgebraContext& ctx, IState x,
         IState y, const std::vector<Half2>& w) {
        PieceAlgebra which;
        if (algebra == "A")
          which = PieceAlgebra::A;
        else if (algebra == "B")
          which = PieceAlgebra::B;
        else
          throw ParameterError("algebra must be \"A\" or \"B\"");
        return homology_dims(graded_piece(which, ctx, x, y, w));
      },
      py::arg("algebra"), py::arg("ctx"), py::arg("x"), py::arg("y"),
      py::arg("w"),
      "Homology dimensions by Maslov degree of one (x, y, w) piece.");
  m.def("predicted_dims", &predicted_dims, py::arg("ctx"), py::arg("x"),
        py::arg("y"), py::arg("w"),
        "Closed-form dimensions of the (x, y, w) piece.");
  m.def(
      "max_maslov_cycle",
      [](const std::string& kind, int length, const std::vector<int>& r) {
        return max_maslov_cycle(interval_kind_from(kind), length, r);
      },
      py::arg("kind"), py::arg("length"), py::arg("r"));
  m.def(
      "local_context",
      [](const std::string& kind, int length) {
        return local_context(interval_kind_from(kind), length);
      },
      py::arg("kind"), py::arg("length"));
  m.def(
      "local_frame",
      [](const std::string& kind, int length) {
        return local_frame(interval_kind_from(kind), length);
      },
      py::arg("kind"), py::arg("length"));
  m.def(
      "classify_lines",
      [](const IState& x, const IState& y) {
        auto c = classify_lines(x, y);
        py::dict out;
        out["crossed"] = c.crossed;
        out["generating"] = c.generating;
        out["left_edge"] = c.left_edge;
        out["right_edge"] = c.right_edge;
        out["two_faced"] = c.two_faced;
        return out;
      },
      py::arg("x"), py::arg("y"));
  m.def("quasi_iso_check", &quasi_iso_check, py::arg("n"), py::arg("k"),
        py::arg("s"), py::arg("cap"), py::arg("jobs") = 1);

  m.def("suite_names", &suite_names);
  m.def(
      "run_suites",
      [](const std::vector<std::string>& names, int max_n, Half2 cap2,
         int jobs, std::uint64_t seed, std::size_t random_triples) {
        auto results =
            run_suites(names, suite_options(max_n, cap2, jobs, seed,
                                            random_triples));
        py::list out;
        for (const auto& r : results)
          out.append(py::make_tuple(r.name, r.report, r.seconds));
        return out;
      },
      py::arg("names"), py::arg("max_n") = 3, py::arg("cap2") = -1,
      py::arg("jobs") = 1, py::arg("seed") = 1,
      py::arg("random_triples") = 10000,
      "Run verification suites; returns (name, report, seconds) tuples.");

  // --- text and pictures ---

  m.def("half2_str", &half2_str, py::arg("v"));
  m.def("parse_element", &parse_element, py::arg("text"), py::arg("ctx"),
        py::arg("x") = std::nullopt);
  m.def("parse_os_element", &parse_os_element, py::arg("text"), py::arg("ctx"),
        py::arg("x") = std::nullopt, py::arg("y") = std::nullopt);
  m.def(
      "element_json",
      [](const F2Element& e) { return element_to_json(e).dump(); },
      py::arg("e"));
  m.def(
      "os_element_json",
      [](const OSElement& e) { return os_element_to_json(e).dump(); },
      py::arg("e"));
  m.def("render_ascii", &render_ascii, py::arg("g"));
}
