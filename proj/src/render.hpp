#pragma once

#include "bisset.hpp"
#include "maps.hpp"
#include "sset.hpp"

#include <string>

namespace segalbar {

enum class render_style { ascii, dot };

std::string render_arrow(const TotalMap& f, render_style style);
std::string render_arrow(const PartialMap& f, render_style style);
std::string render_arrow(const IntervalMap& f, render_style style);
std::string render_arrow(const AnyMap& f, render_style style);

std::string render_summary(const SSet& x);
std::string render_summary(const SSet& x, const SegalReport& report);
std::string render_summary(const BiSSet& x);
std::string render_summary(const BiSSet& x, const DoubleSegalReport& report);

}  // namespace segalbar
