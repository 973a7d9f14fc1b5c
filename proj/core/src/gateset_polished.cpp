// Copyright 2026 The exo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Generated by tools/polish_builtins.sh; do not edit by hand.

#include "gateset_tables.hpp"

namespace exo::tables {

const std::vector<double> kCnot34Polished = {
    1.9064968488593612, 1.5973596671947767, 1.2629458131169526, 1.5973130348468092,
    2.0695169372413424, 0.05297916514044018, 0.7696648256908896, 1.5972962001505935,
    0.7133068641789122, 1.5973143139517378, 1.2629254111557842, 1.906671149990458,
    0.5980285038532898, 1.7145961842657602, 1.0625823134878005, 0.915933552732503,
    2.3023060401261697, 0.9563767906508507, 1.0625812634387777, 0.6809242546425724,
    0.5980330823030673, 1.1993889921681657, 1.0471534162811231, 3.141659201041757,
    0.9552502648465728, 0.9079690859202059, 1.9130144728824576, 2.149911116837968,
    2.186248100523996, 0.9220447094956263, 0.9477270858822417, 3.1416626646391617,
    4.0968305249503665, 2.0943465712286686,
};

const std::vector<double> kCnotExact4qPolished = {
    3.8235108858999345, 3.2156226977844184, 1.6078672097276234, 3.215622369324544,
    1.005788252279288, 2.275588820860686, 1.552650572149357, 0.22690837980807835,
    1.9064968488593612, 1.5973596671947767, 1.2629458131169526, 1.5973130348468092,
    2.0695169372413424, 0.05297916514044018, 0.7696648256908896, 1.5972962001505935,
    0.7133068641789122, 1.5973143139517378, 1.2629254111557842, 1.906671149990458,
    0.5980285038532898, 1.7145961842657602, 1.0625823134878005, 0.915933552732503,
    2.3023060401261697, 0.9563767906508507, 1.0625812634387777, 0.6809242546425724,
    0.5980330823030673, 1.1993889921681657, 1.0471534162811231, 3.141659201041757,
    0.9552502648465728, 0.9079690859202059, 1.9130144728824576, 2.149911116837968,
    2.186248100523996, 0.9220447094956263, 0.9477270858822417, 3.1416626646391617,
    4.0968305249503665, 2.0943465712286686, 2.6356001822994477, 4.512991505539033,
    3.1695187110774663, 1.8006835094920155, 1.3772145373650202, 1.9772940045557788,
    2.9592349805925062, 2.1176296983892877,
};

const std::vector<double> kCnot26Polished = {
    0.8630603291273147, 0.30349625052208656, 0.8632198862944231, 1.2908769364004495,
    0.650645518036396, 0.8718734847297769, -1.2071153919240811, -1.0341202733501649,
    0.650644261180771, 0.8718734886032549, 2.0121962813435363, 1.3028698842588626,
    -0.5021174001777607, 1.302868288356791, 0.4638726247595186, 2.55445562956534,
    0.8718734701687594, 1.2496073864413013, -1.0341202651596206, 2.5544538120059608,
    0.8718734809895323, 1.2908768638466905, 0.6125256580133551, 2.8259469895117864,
    2.8380964062098286, 2.278532261332625,
};

const std::vector<double> kCnot31Polished = {
    3.141592596300345, 0.9897344289379802, 3.1415925308054273, 0.8630603214592683,
    0.3034962578632805, 2.477807540243414, 4.432469554445024, 3.792237637844008,
    2.10747237570569, 5.076069563289026, 0.8718734758302538, 3.7922372806783367,
    5.249065043295472, 5.153788841361464, 1.3028695889254616, 5.781067434125854,
    4.444461454910826, 0.4638727981410839, 1.2496075331148186, 5.249065012118985,
    2.5544544524936277, 4.013466123829776, 4.391200736507955, 2.1074723942301734,
    1.2908769289606712, 3.141592536812973, 0.9276383120771643, 3.1415926184403564,
    0.46628221725538194, 0.3034962477492485, 0.8630603185248038,
};

}  // namespace exo::tables
