#pragma once

#include <utility>
#include <vector>

#include "credfusion/mass_function.hpp"

/// Reference evidence sets shipped with the library. They back the CLI builtins and the
/// regression tests.
namespace credfusion::cases {

/// Five sensor reports over {A1, A2, A3}; sensor 5 is faulty and contradicts the rest.
std::vector<MassFunction> sensor_fault_report();

/// Five reports over {A1, A2, A3} with a compound {A1, A3} element; m4 and m5 are identical.
std::vector<MassFunction> compound_sensor_report();

/// Two close BBAs over four events sharing singletons and the full set.
std::pair<MassFunction, MassFunction> close_pair();

/// Identical BBAs with singleton focal elements only.
std::pair<MassFunction, MassFunction> identical_singleton_pair();

/// Identical BBAs with a compound focal element.
std::pair<MassFunction, MassFunction> identical_compound_pair();

/// Nested-set pair over ten events: m1 = {A2: alpha, A_t: 1 - alpha},
/// m2 = {A2: 0.95, A_t: 0.05} where A_t = {A1..At}.
std::pair<MassFunction, MassFunction> nested_set_pair(double alpha, int t);

/// Shifting-focus pair over eleven events: m1 mixes Omega, {A2,A3,A4}, {A7} and A_t = {A1..At};
/// m2 = {A1..A5: 1}.
std::pair<MassFunction, MassFunction> shifting_focus_pair(int t);

}  // namespace credfusion::cases
