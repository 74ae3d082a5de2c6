#pragma once

#include <string>

#include "magnon.h"

namespace magnon_cli {

/// Fixed 10-significant-digit lowercase scientific form; non-finite as inf, -inf, nan.
std::string format_real(double x);

std::string to_csv(const mg_report* report);
std::string to_json(const mg_report* report);

}  // namespace magnon_cli
