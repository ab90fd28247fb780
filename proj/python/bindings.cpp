#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "shuffles/address.hpp"
#include "shuffles/algebra.hpp"
#include "shuffles/canonical.hpp"
#include "shuffles/errors.hpp"
#include "shuffles/fixtures.hpp"
#include "shuffles/json_io.hpp"
#include "shuffles/ordinal.hpp"
#include "shuffles/shuffle.hpp"

namespace py = pybind11;
using namespace shuffles;

namespace {

constexpr Int kDefaultBudget = 1'000'000;

ordinal::Sign sign_arg(const std::string& s) {
    if (s == "+") return ordinal::Sign::plus;
    if (s == "-") return ordinal::Sign::minus;
    raise(Errc::domain_violation, "sign must be \"+\" or \"-\"");
}

/// A presentation together with its memoized address index.
class PyShuffle {
public:
    explicit PyShuffle(MixedShuffle s) : index_(std::make_shared<AddressIndex>(std::move(s))) {}

    const MixedShuffle& get() const { return index_->shuffle(); }

    static PyShuffle from_json(const std::string& text) {
        return PyShuffle(shuffle_from_json(text));
    }
    static PyShuffle from_file(const std::string& path) {
        return PyShuffle(shuffle_from_file(path));
    }

    std::string label() const { return get().label; }
    std::string to_json() const { return shuffle_to_json(get()); }
    std::string degree() const { return degree_string(get()); }
    std::string sign() const { return sign_string(get()); }
    std::string order_type() const { return ordinal::to_string(shuffles::order_type(get())); }

    Address address_of(Int x, Int budget) { return index_->address_of(x, budget); }
    Int value_at(const Address& a) const { return index_->value_at(a); }
    bool precedes(Int x, Int y, Int budget) { return index_->precedes(x, y, budget); }
    std::vector<Int> sort(std::vector<Int> xs, Int budget) {
        return index_->sort_prefix(std::move(xs), budget);
    }
    std::optional<Int> successor(Int x, Int budget) {
        return index_->segment_successor(x, budget);
    }
    VerificationReport verify(Int upto, Int budget) const {
        return shuffles::verify(get(), upto, budget);
    }
    std::vector<std::pair<Int, Address>> support(Int budget) const {
        return enumerate_support(get(), budget);
    }
    std::string diagram(bool dot) const {
        return dot ? canonical::diagram_dot(get()) : canonical::diagram(get());
    }
    std::pair<std::string, bool> canonical_parts() const {
        auto res = canonical::canonicalize(canonical::part_type_sequence(get()));
        return {canonical::to_string(res.sequence), res.unique};
    }
    std::string part_types() const {
        return canonical::to_string(canonical::part_type_sequence(get()));
    }
    PyShuffle involute() const { return PyShuffle(algebra::involution(get())); }
    PyShuffle transfer(size_t pair_index, Int n, Int budget) const {
        return PyShuffle(canonical::transfer(get(), pair_index, n, budget));
    }
    bool order_equivalent_to(const PyShuffle& other) const {
        return order_equivalent(get(), other.get());
    }

private:
    std::shared_ptr<AddressIndex> index_;
};

} // namespace

PYBIND11_MODULE(_shuffles, m) {
    m.doc() = "Finitely presented shuffles of the naturals";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetString(PyExc_ValueError,
                            (std::string(errc_name(e.code)) + ": " + e.what()).c_str());
        }
    });

    py::class_<Address>(m, "Address")
        .def(py::init([](Int t, std::vector<Int> indices) {
                 return Address{t, std::move(indices)};
             }),
             py::arg("t"), py::arg("indices"))
        .def_readonly("t", &Address::t)
        .def_readonly("indices", &Address::indices)
        .def("__repr__", [](const Address& a) { return to_string(a); })
        .def("__eq__", [](const Address& a, const Address& b) { return a == b; })
        .def("as_tuple", [](const Address& a) {
            py::tuple t(a.indices.size() + 1);
            t[0] = a.t;
            for (size_t i = 0; i < a.indices.size(); ++i) t[i + 1] = a.indices[i];
            return t;
        });

    py::class_<VerificationReport::Duplicate>(m, "Duplicate")
        .def_readonly("value", &VerificationReport::Duplicate::value)
        .def_readonly("first", &VerificationReport::Duplicate::first)
        .def_readonly("second", &VerificationReport::Duplicate::second);

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("checked_up_to", &VerificationReport::checked_up_to)
        .def_readonly("covered", &VerificationReport::covered)
        .def_readonly("duplicates", &VerificationReport::duplicates)
        .def_readonly("missing", &VerificationReport::missing)
        .def_readonly("budget_used", &VerificationReport::budget_used)
        .def_readonly("exhausted", &VerificationReport::exhausted)
        .def("ok", &VerificationReport::ok);

    py::class_<algebra::GroupReport>(m, "GroupReport")
        .def_readonly("closure_ok", &algebra::GroupReport::closure_ok)
        .def_readonly("associativity_ok", &algebra::GroupReport::associativity_ok)
        .def_readonly("identity_ok", &algebra::GroupReport::identity_ok)
        .def_readonly("inverses_ok", &algebra::GroupReport::inverses_ok)
        .def_readonly("failures", &algebra::GroupReport::failures)
        .def("passed", &algebra::GroupReport::passed);

    py::class_<PyShuffle>(m, "Shuffle")
        .def_static("from_json", &PyShuffle::from_json, py::arg("text"))
        .def_static("from_file", &PyShuffle::from_file, py::arg("path"))
        .def_property_readonly("label", &PyShuffle::label)
        .def("to_json", &PyShuffle::to_json)
        .def("degree", &PyShuffle::degree)
        .def("sign", &PyShuffle::sign)
        .def("order_type", &PyShuffle::order_type)
        .def("address_of", &PyShuffle::address_of, py::arg("x"),
             py::arg("budget") = kDefaultBudget)
        .def("value_at", &PyShuffle::value_at, py::arg("address"))
        .def("precedes", &PyShuffle::precedes, py::arg("x"), py::arg("y"),
             py::arg("budget") = kDefaultBudget)
        .def("sort", &PyShuffle::sort, py::arg("values"),
             py::arg("budget") = kDefaultBudget)
        .def("successor", &PyShuffle::successor, py::arg("x"),
             py::arg("budget") = kDefaultBudget)
        .def("verify", &PyShuffle::verify, py::arg("upto") = 1000,
             py::arg("budget") = kDefaultBudget)
        .def("support", &PyShuffle::support, py::arg("budget") = 10'000)
        .def("diagram", &PyShuffle::diagram, py::arg("dot") = false)
        .def("canonical", &PyShuffle::canonical_parts)
        .def("part_types", &PyShuffle::part_types)
        .def("involute", &PyShuffle::involute)
        .def("transfer", &PyShuffle::transfer, py::arg("pair_index"), py::arg("n"),
             py::arg("budget") = kDefaultBudget)
        .def("order_equivalent_to", &PyShuffle::order_equivalent_to)
        .def("__repr__", [](const PyShuffle& s) {
            return "<Shuffle '" + s.label() + "'>";
        });

    m.def("fixture_names", &fixtures::names);
    m.def("fixture", [](const std::string& name) {
        return PyShuffle(fixtures::load(name));
    });
    m.def(
        "lex_compare",
        [](const Address& a, const Address& b) {
            Ordering o = lex_compare(a, b);
            return o == Ordering::lt ? -1 : o == Ordering::gt ? 1 : 0;
        },
        py::arg("a"), py::arg("b"));
    m.def(
        "compose",
        [](const PyShuffle& s, const PyShuffle& u) {
            return PyShuffle(algebra::compose(s.get(), u.get()));
        },
        py::arg("s"), py::arg("u"));
    m.def(
        "identity",
        [](const std::string& sign) {
            return PyShuffle(algebra::identity_element(sign_arg(sign)));
        },
        py::arg("sign") = "+");
    m.def(
        "from_permutation",
        [](const std::vector<Int>& perm, const std::string& sign) {
            return PyShuffle(algebra::from_finite_permutation(perm, sign_arg(sign)).shuffle);
        },
        py::arg("perm"), py::arg("sign") = "+");
    m.def(
        "invert",
        [](const PyShuffle& s, Int upto, Int budget) {
            return PyShuffle(
                algebra::invert_i1(algebra::I1Element::wrap(s.get()), upto, budget).shuffle);
        },
        py::arg("s"), py::arg("upto") = 1000, py::arg("budget") = kDefaultBudget);
    m.def(
        "group_check",
        [](const std::vector<PyShuffle>& elements, Int upto, Int budget) {
            std::vector<algebra::I1Element> wrapped;
            wrapped.reserve(elements.size());
            for (const PyShuffle& e : elements)
                wrapped.push_back(algebra::I1Element::wrap(e.get()));
            return algebra::group_check(wrapped, upto, budget);
        },
        py::arg("elements"), py::arg("upto") = 500, py::arg("budget") = kDefaultBudget);
}
