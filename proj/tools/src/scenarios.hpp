#pragma once

#include "ricci_lab/profile.hpp"
#include "ricci_lab/tools/params.hpp"
#include "ricci_lab/tools/report.hpp"

#include <string>

namespace ricci_lab::tools::detail {

void run_lemma1(const Params& p, RunReport& r);
void run_lemma2(const Params& p, RunReport& r);
void run_einstein(const Params& p, RunReport& r);
void run_calabi(const Params& p, RunReport& r);
void run_theorem2(const Params& p, RunReport& r);
void run_example3(const Params& p, RunReport& r);
void run_gao(const Params& p, RunReport& r);
void run_blowup(const Params& p, RunReport& r);

// u1, v1, ..., and spheres: explicit weight rows in a lemma section.
bool weight_row_key(const std::string& key);

void add_profile(CsvTable& table, const std::string& name, const RadialProfile& profile, int samples);

// "2.5" -> "2.5", used to build check names.
std::string tag(double v);

}  // namespace ricci_lab::tools::detail
