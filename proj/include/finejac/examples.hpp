#pragma once

#include <string>

#include "finejac/stability.hpp"

namespace finejac {

// Builtin corpus. Conditions are embedded data, not re-derived, so the test
// suites check the engine against them rather than against itself.

UniversalStability example_2_6();        // degree 3, type (2,6)
UniversalStability example_2_4();        // degree 0, type (2,4)
UniversalStability example_3_2();        // degree 6, type (3,2)
UniversalStability example_g_1(int g);   // degree g+1, type (g,1), g >= 4

Graph figure_2_6();                      // three three-edge paths between two poles
Graph figure_3_2();                      // trivalent genus-3 model with two marked poles
Graph figure_g_1(int g);                 // marked ladder with a doubled final rung

// Resolves "ex_2_6", "ex_2_4", "ex_3_2", "ex_g_1:<g>".
UniversalStability example_by_name(const std::string& name);
// Resolves "fig2", "fig3", "fig4:<g>".
Graph figure_by_name(const std::string& name);
bool is_example_name(const std::string& name);
bool is_figure_name(const std::string& name);

}  // namespace finejac
