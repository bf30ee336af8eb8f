// Walks one (g, d) pair through the quartic criterion and prints each step.
//
//   quartic_walkthrough [g d]     (default 3 9)

#include <cstdlib>
#include <iostream>

#include "mds/mds.hpp"

using namespace mds;

int main(int argc, char **argv)
{
    CurveNumerics n(3, 9);
    try {
        if (argc == 3) {
            n = CurveNumerics(parse_integer(argv[1]), parse_integer(argv[2]));
        }
    } catch (const InvalidArgument &e) {
        std::cerr << e.what() << '\n';
        return 2;
    }
    std::cout << "curve " << n.to_string() << "\n";

    const auto check = k3::quartic_obstruction_hypotheses(n);
    for (const auto &h : check.hypotheses) {
        std::cout << "  [" << (h.holds ? "ok" : "no") << "] " << h.name << "  (" << h.detail << ")\n";
    }
    if (!check.ok()) {
        std::cout << "criterion does not apply\n";
        return 3;
    }

    const auto &rat = check.pell->rational;
    std::cout << "r = " << *check.r << "\n";
    std::cout << "x^2 - r y^2 = -8: " << pell::name(rat.certificate);
    if (rat.modulus) {
        std::cout << " mod " << *rat.modulus;
    }
    std::cout << "\n";

    const auto cones = blowup::cones_extremal_surface(n, 4);
    std::cout << "Eff = <" << cones.cones.effective.first.to_string() << ", " << cones.cones.effective.second.to_string()
              << ">\n";
    std::cout << "Mov = Nef = <" << cones.cones.movable.first.to_string() << ", "
              << cones.cones.movable.second.to_string() << ">\n";

    const auto v = classify::classify(n, classify::evidence::GeneralOnQuartic{});
    std::cout << "verdict: " << name(v.status) << " for the " << name(*v.quantifier) << " ("
              << name(*v.obstruction) << ")\n";

    const auto rec = hilbert::quartic_component(n);
    std::cout << "quartic component test: " << hilbert::name(rec.status);
    if (rec.dimension) {
        std::cout << ", dimension " << *rec.dimension;
    }
    for (const auto &note : rec.notes) {
        std::cout << "; " << note;
    }
    std::cout << "\n";
    return EXIT_SUCCESS;
}
