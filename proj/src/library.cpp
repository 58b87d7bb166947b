#include "zolab/error.hpp"
#include "zolab/logic.hpp"

namespace zolab {

namespace {

// Two distinct neighbours x, y of first are joined by a walk x-a-b-c-y whose
// inner vertices avoid first. The inner vertices need not be distinct from
// each other, nor from x and y.
constexpr const char* kEx2Path4 =
    "forall x. forall y. adj(first, x) & adj(first, y) & !(x = y) -> "
    "(exists a. exists b. exists c. adj(x, a) & adj(a, b) & adj(b, c) & adj(c, y) "
    "& !(a = first) & !(b = first) & !(c = first))";

Formula extension_ak(int k) {
    if (k < 1) throw InvalidArgument("extension_Ak needs k >= 1");
    if (k > 12) throw InvalidArgument("extension_Ak supports k <= 12");
    std::vector<Term> xs;
    for (int i = 1; i <= k; ++i) xs.push_back(Term::var("x" + std::to_string(i)));
    const Term y = Term::var("y");

    std::vector<Formula> cases;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        std::vector<Formula> parts;
        for (int i = 0; i < k; ++i) {
            Formula a = fo::adj(y, xs[static_cast<std::size_t>(i)]);
            parts.push_back(mask >> i & 1u ? a : fo::negate(a));
        }
        for (int i = 0; i < k; ++i) parts.push_back(fo::negate(fo::eq(y, xs[static_cast<std::size_t>(i)])));
        cases.push_back(fo::exists("y", fo::conj(std::move(parts))));
    }
    Formula body = fo::conj(std::move(cases));

    std::vector<Formula> distinct;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            distinct.push_back(fo::negate(fo::eq(xs[static_cast<std::size_t>(i)], xs[static_cast<std::size_t>(j)])));
    if (!distinct.empty()) body = fo::implies(fo::conj(std::move(distinct)), std::move(body));

    for (int i = k; i >= 1; --i) body = fo::forall("x" + std::to_string(i), std::move(body));
    return body;
}

}  // namespace

const std::vector<LibraryEntry>& library_entries() {
    static const std::vector<LibraryEntry> entries{
        {"path2", Vocabulary::L_PLUS, "first and last have a common neighbour"},
        {"ex2_path4", Vocabulary::L_PLUS, "distinct neighbours of first are joined by a 4-walk avoiding first"},
        {"triangle", Vocabulary::L, "some three vertices are pairwise adjacent"},
        {"edge_in_c4", Vocabulary::L, "every edge lies on a 4-cycle"},
        {"adj_first_last", Vocabulary::L_PLUS, "first is adjacent to last"},
        {"extension_Ak", Vocabulary::L, "every k distinct vertices admit every adjacency pattern"},
    };
    return entries;
}

Formula library(std::string_view name, int k) {
    if (name == "path2") return parse("exists y. adj(first, y) & adj(y, last)", Vocabulary::L_PLUS);
    if (name == "ex2_path4") return parse(kEx2Path4, Vocabulary::L_PLUS);
    if (name == "triangle") return parse("exists x. exists y. exists z. adj(x, y) & adj(y, z) & adj(x, z)", Vocabulary::L);
    if (name == "edge_in_c4")
        return parse("forall x. forall y. adj(x, y) -> (exists z. exists w. adj(y, z) & adj(z, w) & adj(w, x) "
                     "& !(z = x) & !(w = y))",
                     Vocabulary::L);
    if (name == "adj_first_last") return parse("adj(first, last)", Vocabulary::L_PLUS);
    if (name == "extension_Ak") return extension_ak(k);
    throw InvalidArgument("unknown library sentence '" + std::string(name) + "'");
}

}  // namespace zolab
