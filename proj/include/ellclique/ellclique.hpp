// Copyright 2026 The ellclique Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once
#include "ellclique/clique_dp.hpp"
#include "ellclique/defect_ext.hpp"
#include "ellclique/embedding.hpp"
#include "ellclique/io.hpp"
#include "ellclique/oracle.hpp"
#include "ellclique/topology.hpp"
#include "ellclique/word_codec.hpp"
#include "ellclique/yield_lab.hpp"
