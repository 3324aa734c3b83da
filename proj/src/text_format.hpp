/*
Copyright 2026 the pursuit authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <string>

namespace pursuit {

// 17 significant digits: enough to reproduce any double bit-exactly on parse.
std::string format17(double value);

// strtod with full-string validation; throws ErrorCode::parse_error.
double parse_double(const std::string& token, const std::string& where);

long parse_long(const std::string& token, const std::string& where);

// Atomic-ish file write: write to <path>.tmp then rename over <path>.
void write_file(const std::string& path, const std::string& contents);

std::string read_file(const std::string& path);

}  // namespace pursuit
