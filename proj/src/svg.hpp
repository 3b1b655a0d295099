/*
 * Copyright 2026 The corpus-lens Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Minimal SVG chart emission. Direct markup, no plotting dependency; bar and
// point geometry is linear in the data so tests can check proportionality
// from the emitted attributes.

#include <string>
#include <vector>

namespace corpuslens::svg {

struct Series {
    std::string label;
    std::vector<double> values; // one per category
};

/// Vertical grouped bars: one cluster per category, one bar per series inside
/// each cluster. Bar heights are value / max(values) * plot height. Each bar
/// rect carries data-series, data-category, and data-value attributes.
std::string grouped_bar_chart(const std::string& title,
                              const std::vector<std::string>& categories,
                              const std::vector<Series>& series);

/// One polyline per series across shared x positions, with a circle marker
/// per point (data-value attribute included).
std::string line_chart(const std::string& title, const std::vector<std::string>& x_labels,
                       const std::vector<Series>& series);

} // namespace corpuslens::svg
