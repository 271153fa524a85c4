#pragma once

#include "horoaut/json_io.hpp"

#include <string>

namespace horoaut {

/// Colors are used only on a terminal and never when HOROAUT_COLOR=never.
bool color_enabled(bool is_terminal);

std::string render_text(const FanRootsDocument& doc, bool color);
std::string render_text(const HoroDocument& doc, bool color);
std::string render_text(const BundleDocument& doc, bool color);

}  // namespace horoaut
