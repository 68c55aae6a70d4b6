/*
 * Copyright 2026 The heyde toolkit authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "heyde/errors.hpp"

namespace heyde {

/// Value of the plain-text key/value tree format used by scenario files:
///   key = value            # comment
///   dist.mu1 = {type = "finite", probs = [0.5, 0.5]}
/// Values are integers, reals, booleans, quoted strings, lists [..] and
/// tables {..}. Tables preserve key order and may hold repeated keys (the
/// scenario layer decides which keys may repeat).
struct KvValue {
    enum class Type { Int, Real, Bool, Str, List, Table };

    Type type = Type::Int;
    std::int64_t i = 0;
    double d = 0.0;
    bool b = false;
    std::string s;
    std::vector<KvValue> list;
    std::vector<std::pair<std::string, KvValue>> table;
    int line = 1;
    int col = 1;

    const char* type_name() const;

    std::int64_t as_int(const std::string& what) const;
    double as_real(const std::string& what) const; // accepts integers
    bool as_bool(const std::string& what) const;
    const std::string& as_str(const std::string& what) const;
    const std::vector<KvValue>& as_list(const std::string& what) const;
    const std::vector<std::pair<std::string, KvValue>>& as_table(const std::string& what) const;
};

/// Parse a document into a table value. Dotted keys create nested tables.
KvValue kv_parse(const std::string& text);

/// Typed cursor over a table that records which keys were consumed; finish()
/// rejects anything left over, so unknown keys are hard errors.
class KvTableReader {
  public:
    KvTableReader(const KvValue& table, std::string path);

    bool has(const std::string& key) const;
    /// Single-valued key; throws on duplicates.
    const KvValue* find(const std::string& key);
    const KvValue& require(const std::string& key);
    /// Repeatable key, in document order.
    std::vector<const KvValue*> find_all(const std::string& key);

    std::int64_t require_int(const std::string& key);
    std::int64_t int_or(const std::string& key, std::int64_t fallback);
    double require_real(const std::string& key);
    double real_or(const std::string& key, double fallback);
    std::string require_str(const std::string& key);
    std::string str_or(const std::string& key, const std::string& fallback);

    const std::string& path() const { return path_; }
    std::string sub_path(const std::string& key) const { return path_ + "." + key; }

    /// Throws ValidationError naming any unconsumed key.
    void finish();

  private:
    const KvValue& table_;
    std::string path_;
    std::vector<bool> consumed_;
};

std::vector<double> kv_real_list(const KvValue& v, const std::string& what);
std::vector<std::int64_t> kv_int_list(const KvValue& v, const std::string& what);
std::vector<std::vector<std::int64_t>> kv_int_matrix(const KvValue& v, const std::string& what);
std::vector<std::vector<double>> kv_real_matrix(const KvValue& v, const std::string& what);

} // namespace heyde
