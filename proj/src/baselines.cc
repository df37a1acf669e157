/*
 * Copyright 2026 The qirank Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "qirank/baselines.h"

#include <algorithm>
#include <cctype>
#include <string>

namespace qirank {

namespace {

// Row 0 is the query-intercept model; rows 1..6 are the competitors.
constexpr std::array<PublishedRow, 7> kOhsumed = {{
    {"This",
     {{{0.491, 0.086}, {0.480, 0.058}, {0.458, 0.055}, {0.448, 0.054}, {0.447, 0.047}}},
     {{{0.610, 0.092}, {0.598, 0.082}, {0.560, 0.090}, {0.526, 0.092}, {0.511, 0.081}}},
     {0.445, 0.065}},
    {"RankBoost",
     {{{0.483, 0.079}, {0.461, 0.063}, {0.442, 0.058}, {0.436, 0.044}, {0.436, 0.042}}},
     {{{0.595, 0.090}, {0.562, 0.081}, {0.525, 0.093}, {0.505, 0.072}, {0.495, 0.081}}},
     {0.440, 0.062}},
    {"RankSVM",
     {{{0.476, 0.091}, {0.459, 0.059}, {0.455, 0.054}, {0.445, 0.057}, {0.441, 0.055}}},
     {{{0.619, 0.096}, {0.579, 0.072}, {0.558, 0.077}, {0.525, 0.088}, {0.507, 0.096}}},
     {0.447, 0.067}},
    {"FRank",
     {{{0.510, 0.074}, {0.478, 0.060}, {0.457, 0.062}, {0.445, 0.054}, {0.442, 0.055}}},
     {{{0.619, 0.051}, {0.581, 0.079}, {0.534, 0.098}, {0.501, 0.091}, {0.485, 0.097}}},
     {0.446, 0.062}},
    {"ListNet",
     {{{0.497, 0.062}, {0.468, 0.065}, {0.451, 0.056}, {0.451, 0.050}, {0.449, 0.040}}},
     {{{0.629, 0.080}, {0.577, 0.097}, {0.544, 0.098}, {0.520, 0.098}, {0.510, 0.085}}},
     {0.450, 0.063}},
    {"AdaRank.MAP",
     {{{0.496, 0.100}, {0.471, 0.075}, {0.448, 0.070}, {0.443, 0.058}, {0.438, 0.057}}},
     {{{0.605, 0.102}, {0.567, 0.087}, {0.528, 0.102}, {0.502, 0.087}, {0.491, 0.091}}},
     {0.442, 0.061}},
    {"AdaRank.NDCG",
     {{{0.474, 0.091}, {0.456, 0.057}, {0.442, 0.055}, {0.441, 0.048}, {0.437, 0.046}}},
     {{{0.605, 0.099}, {0.562, 0.063}, {0.529, 0.073}, {0.506, 0.073}, {0.491, 0.082}}},
     {0.442, 0.058}},
}};

constexpr std::array<PublishedRow, 7> kTd2003 = {{
    {"This",
     {{{0.430, 0.179}, {0.398, 0.146}, {0.375, 0.125}, {0.369, 0.113}, {0.360, 0.105}}},
     {{{0.420, 0.192}, {0.340, 0.161}, {0.283, 0.131}, {0.253, 0.115}, {0.222, 0.106}}},
     {0.248, 0.075}},
    {"RankBoost",
     {{{0.280, 0.097}, {0.272, 0.086}, {0.280, 0.071}, {0.282, 0.074}, {0.285, 0.064}}},
     {{{0.270, 0.104}, {0.230, 0.112}, {0.210, 0.080}, {0.193, 0.071}, {0.178, 0.053}}},
     {0.212, 0.047}},
    {"RankSVM",
     {{{0.370, 0.130}, {0.363, 0.132}, {0.341, 0.118}, {0.345, 0.117}, {0.341, 0.115}}},
     {{{0.350, 0.132}, {0.300, 0.137}, {0.243, 0.100}, {0.233, 0.091}, {0.206, 0.082}}},
     {0.256, 0.083}},
    {"FRank",
     {{{0.390, 0.143}, {0.342, 0.107}, {0.330, 0.087}, {0.332, 0.079}, {0.336, 0.074}}},
     {{{0.370, 0.148}, {0.260, 0.082}, {0.223, 0.043}, {0.210, 0.045}, {0.186, 0.049}}},
     {0.245, 0.065}},
    {"ListNet",
     {{{0.430, 0.160}, {0.386, 0.125}, {0.386, 0.106}, {0.373, 0.104}, {0.374, 0.094}}},
     {{{0.420, 0.164}, {0.310, 0.129}, {0.283, 0.090}, {0.240, 0.075}, {0.222, 0.061}}},
     {0.273, 0.068}},
    {"AdaRank.MAP",
     {{{0.320, 0.104}, {0.268, 0.120}, {0.229, 0.104}, {0.206, 0.093}, {0.194, 0.086}}},
     {{{0.310, 0.096}, {0.230, 0.105}, {0.163, 0.081}, {0.125, 0.064}, {0.102, 0.050}}},
     {0.137, 0.063}},
    {"AdaRank.NDCG",
     {{{0.410, 0.207}, {0.347, 0.195}, {0.309, 0.181}, {0.286, 0.171}, {0.270, 0.161}}},
     {{{0.400, 0.203}, {0.305, 0.183}, {0.237, 0.161}, {0.190, 0.140}, {0.156, 0.120}}},
     {0.185, 0.105}},
}};

constexpr std::array<PublishedRow, 7> kTd2004 = {{
    {"This",
     {{{0.473, 0.132}, {0.454, 0.075}, {0.450, 0.059}, {0.459, 0.050}, {0.472, 0.043}}},
     {{{0.447, 0.146}, {0.370, 0.095}, {0.316, 0.076}, {0.288, 0.076}, {0.264, 0.062}}},
     {0.379, 0.051}},
    {"RankBoost",
     {{{0.473, 0.055}, {0.439, 0.057}, {0.448, 0.052}, {0.461, 0.036}, {0.472, 0.034}}},
     {{{0.447, 0.056}, {0.347, 0.083}, {0.304, 0.079}, {0.277, 0.070}, {0.253, 0.067}}},
     {0.384, 0.043}},
    {"RankSVM",
     {{{0.433, 0.094}, {0.406, 0.086}, {0.397, 0.082}, {0.410, 0.074}, {0.420, 0.067}}},
     {{{0.407, 0.098}, {0.327, 0.089}, {0.273, 0.083}, {0.247, 0.082}, {0.225, 0.072}}},
     {0.350, 0.072}},
    {"FRank",
     {{{0.467, 0.113}, {0.435, 0.088}, {0.445, 0.078}, {0.455, 0.055}, {0.471, 0.057}}},
     {{{0.433, 0.115}, {0.340, 0.098}, {0.311, 0.082}, {0.273, 0.071}, {0.256, 0.071}}},
     {0.381, 0.069}},
    {"ListNet",
     {{{0.427, 0.080}, {0.422, 0.049}, {0.418, 0.057}, {0.449, 0.041}, {0.458, 0.036}}},
     {{{0.407, 0.086}, {0.357, 0.087}, {0.307, 0.084}, {0.287, 0.069}, {0.257, 0.059}}},
     {0.372, 0.046}},
    {"AdaRank.MAP",
     {{{0.393, 0.060}, {0.387, 0.086}, {0.399, 0.085}, {0.400, 0.086}, {0.406, 0.083}}},
     {{{0.353, 0.045}, {0.300, 0.086}, {0.282, 0.068}, {0.242, 0.063}, {0.216, 0.064}}},
     {0.331, 0.089}},
    {"AdaRank.NDCG",
     {{{0.360, 0.161}, {0.377, 0.123}, {0.378, 0.117}, {0.380, 0.102}, {0.388, 0.093}}},
     {{{0.320, 0.139}, {0.300, 0.082}, {0.262, 0.092}, {0.232, 0.086}, {0.207, 0.082}}},
     {0.299, 0.088}},
}};

const std::array<PublishedRow, 7>& table_for(Collection c) {
  switch (c) {
    case Collection::kOhsumed: return kOhsumed;
    case Collection::kTd2003: return kTd2003;
    case Collection::kTd2004: return kTd2004;
  }
  return kOhsumed;
}

}  // namespace

std::string_view to_string(Collection c) {
  switch (c) {
    case Collection::kOhsumed: return "OHSUMED";
    case Collection::kTd2003: return "TD2003";
    case Collection::kTd2004: return "TD2004";
  }
  return "?";
}

std::optional<Collection> parse_collection(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char ch) { return std::toupper(ch); });
  for (Collection c : {Collection::kOhsumed, Collection::kTd2003, Collection::kTd2004}) {
    if (to_string(c) == upper) return c;
  }
  return std::nullopt;
}

const PublishedRow& published_result(Collection c) { return table_for(c)[0]; }

std::span<const PublishedRow> baseline_rows(Collection c) {
  return std::span<const PublishedRow>(table_for(c)).subspan(1);
}

}  // namespace qirank
