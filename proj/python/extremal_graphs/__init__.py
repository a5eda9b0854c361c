# Copyright 2026 The extremal-graphs Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Extremal scale-free graphs G*_t: construction, analysis and baselines."""

from ._core import (
    ClassifiedGraph,
    ExtremalError,
    GammaFit,
    Graph,
    TheoremVerdict,
    analysis_report_json,
    build_direct,
    build_recursive,
    class_census_ok,
    closed_form_degree_table,
    cumulative_distribution,
    degree_histogram,
    dot,
    edge_list,
    exact_diameter,
    extremal_fit_window,
    extremal_metadata,
    fast_diameter_bounds,
    fit_gamma,
    generate_ba,
    is_complete,
    is_connected,
    order_formula,
    parse_edge_list,
    size_formula,
    theorem_check,
)

__all__ = [
    "ClassifiedGraph",
    "ExtremalError",
    "GammaFit",
    "Graph",
    "TheoremVerdict",
    "analysis_report_json",
    "build_direct",
    "build_recursive",
    "class_census_ok",
    "closed_form_degree_table",
    "cumulative_distribution",
    "degree_histogram",
    "dot",
    "edge_list",
    "exact_diameter",
    "extremal_fit_window",
    "extremal_metadata",
    "fast_diameter_bounds",
    "fit_gamma",
    "generate_ba",
    "is_complete",
    "is_connected",
    "order_formula",
    "parse_edge_list",
    "size_formula",
    "theorem_check",
]
