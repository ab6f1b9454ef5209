// risfb: limited-feedback simulator for RIS-assisted FDD downlinks
// Copyright (C) 2026 The risfb authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// SPDX-License-Identifier: Apache-2.0
// ------------------------------------------------------------------------

#include "risfb/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

namespace
{
    std::string trim(const std::string &s)
    {
        const auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos)
            return "";
        const auto e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    }

    std::vector<std::string> split(const std::string &s, char sep)
    {
        std::vector<std::string> out;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, sep))
            out.push_back(trim(item));
        return out;
    }

    struct Entry
    {
        std::string value;
        int line = 0;
    };

    using Assignments = std::vector<std::pair<std::string, Entry>>;

    double to_double(const std::string &key, const Entry &e)
    {
        const std::string v = trim(e.value);
        if (v == "-inf")
            return -std::numeric_limits<double>::infinity();
        if (v == "inf" || v == "+inf")
            return std::numeric_limits<double>::infinity();
        double x = 0.0;
        const auto r = std::from_chars(v.data(), v.data() + v.size(), x);
        if (v.empty() || r.ec != std::errc() || r.ptr != v.data() + v.size())
            throw risfb::ParseError("field '" + key + "': expected a number, got '" + v + "'", e.line);
        return x;
    }

    long long to_int(const std::string &key, const Entry &e)
    {
        const std::string v = trim(e.value);
        long long x = 0;
        const auto r = std::from_chars(v.data(), v.data() + v.size(), x);
        if (v.empty() || r.ec != std::errc() || r.ptr != v.data() + v.size())
            throw risfb::ParseError("field '" + key + "': expected an integer, got '" + v + "'", e.line);
        return x;
    }

    std::uint64_t to_u64(const std::string &key, const Entry &e)
    {
        const std::string v = trim(e.value);
        std::uint64_t x = 0;
        const auto r = std::from_chars(v.data(), v.data() + v.size(), x);
        if (v.empty() || r.ec != std::errc() || r.ptr != v.data() + v.size())
            throw risfb::ParseError("field '" + key + "': expected an unsigned integer, got '" + v + "'", e.line);
        return x;
    }

    std::pair<int, int> to_grid(const std::string &key, const Entry &e)
    {
        try
        {
            return risfb::parse_grid(e.value);
        }
        catch (const risfb::Error &)
        {
            throw risfb::ParseError("field '" + key + "': expected ROWSxCOLS, got '" + trim(e.value) + "'", e.line);
        }
    }

    risfb::Vec3 to_vec3(const std::string &key, const Entry &e)
    {
        const auto parts = split(e.value, ',');
        if (parts.size() != 3)
            throw risfb::ParseError("field '" + key + "': expected x,y,z", e.line);
        risfb::Vec3 v;
        for (int k = 0; k < 3; ++k)
            v[k] = to_double(key, {parts[k], e.line});
        return v;
    }

    // Applies one key to the scenario/spec; returns false for unknown keys
    bool apply(risfb::SweepSpec &spec, const std::string &key, const Entry &e)
    {
        auto &sc = spec.base;
        auto &g = sc.geom;
        if (key == "bs_array")
            std::tie(g.n_b_v, g.n_b_h) = to_grid(key, e);
        else if (key == "ris_array")
            std::tie(g.n_r_v, g.n_r_h) = to_grid(key, e);
        else if (key == "spacing_b_v")
            g.spacing_b_v = to_double(key, e);
        else if (key == "spacing_b_h")
            g.spacing_b_h = to_double(key, e);
        else if (key == "spacing_r_v")
            g.spacing_r_v = to_double(key, e);
        else if (key == "spacing_r_h")
            g.spacing_r_h = to_double(key, e);
        else if (key == "pos_bs")
            g.pos_b = to_vec3(key, e);
        else if (key == "pos_ris")
            g.pos_r = to_vec3(key, e);
        else if (key == "pos_ms")
            g.pos_m = to_vec3(key, e);
        else if (key == "k_b_db")
            sc.k_b_db = to_double(key, e);
        else if (key == "k_m_db")
            sc.k_m_db = to_double(key, e);
        else if (key == "l_b")
            sc.l_b = int(to_int(key, e));
        else if (key == "l_m")
            sc.l_m = int(to_int(key, e));
        else if (key == "e_db")
            sc.e_db = to_double(key, e);
        else if (key == "noise_db")
            sc.noise_db = to_double(key, e);
        else if (key == "b")
            sc.b = int(to_int(key, e));
        else if (key == "trials")
            spec.trials = int(to_int(key, e));
        else if (key == "seed")
            spec.seed = to_u64(key, e);
        else if (key == "strategies")
        {
            try
            {
                spec.strategies = risfb::parse_strategy_list(e.value);
            }
            catch (const risfb::ValidationError &ex)
            {
                throw risfb::ParseError("field 'strategies': " + std::string(ex.what()), e.line);
            }
        }
        else
            return false;
        return true;
    }

    const std::map<std::string, std::string> &section_keys()
    {
        static const std::map<std::string, std::string> m = {
            {"bs_array", "geometry"}, {"ris_array", "geometry"}, {"spacing_b_v", "geometry"},
            {"spacing_b_h", "geometry"}, {"spacing_r_v", "geometry"}, {"spacing_r_h", "geometry"},
            {"pos_bs", "geometry"}, {"pos_ris", "geometry"}, {"pos_ms", "geometry"},
            {"k_b_db", "environment"}, {"k_m_db", "environment"}, {"l_b", "environment"}, {"l_m", "environment"},
            {"e_db", "link"}, {"noise_db", "link"}, {"b", "link"},
            {"trials", "run"}, {"seed", "run"}, {"strategies", "run"}};
        return m;
    }

    struct SweepSection
    {
        std::string name;
        int line = 0;
        Assignments assignments;
        Entry variable, values;
        bool has_variable = false, has_values = false;
    };
}

std::pair<int, int> risfb::parse_grid(const std::string &s)
{
    const std::string t = trim(s);
    const auto x = t.find('x');
    if (x == std::string::npos)
        throw ValidationError("grid must look like ROWSxCOLS");
    int a = 0, b = 0;
    const auto r1 = std::from_chars(t.data(), t.data() + x, a);
    const auto r2 = std::from_chars(t.data() + x + 1, t.data() + t.size(), b);
    if (x == 0 || r1.ec != std::errc() || r1.ptr != t.data() + x || r2.ec != std::errc() ||
        r2.ptr != t.data() + t.size())
        throw ValidationError("grid must look like ROWSxCOLS");
    return {a, b};
}

std::vector<risfb::SweepSpec> risfb::parse_config(const std::string &text, const std::string &source)
{
    Assignments base;
    std::vector<SweepSection> sweeps;
    std::string section;

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    try
    {
        while (std::getline(in, raw))
        {
            ++line_no;
            std::string line = raw;
            if (const auto h = line.find('#'); h != std::string::npos)
                line.erase(h);
            line = trim(line);
            if (line.empty())
                continue;

            if (line.front() == '[')
            {
                if (line.back() != ']')
                    throw ParseError("unterminated section header", line_no);
                const std::string name = trim(line.substr(1, line.size() - 2));
                if (name.rfind("sweep", 0) == 0 && (name.size() == 5 || name[5] == ' ' || name[5] == '\t'))
                {
                    SweepSection s;
                    s.name = trim(name.substr(5));
                    if (s.name.empty())
                        s.name = "sweep" + std::to_string(sweeps.size() + 1);
                    s.line = line_no;
                    sweeps.push_back(s);
                    section = "sweep";
                }
                else if (name == "geometry" || name == "environment" || name == "link" || name == "run")
                    section = name;
                else
                    throw ParseError("unknown section [" + name + "]", line_no);
                continue;
            }

            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw ParseError("expected key = value", line_no);
            const std::string key = trim(line.substr(0, eq));
            const Entry e{trim(line.substr(eq + 1)), line_no};
            if (section.empty())
                throw ParseError("key '" + key + "' appears before any section", line_no);

            if (section == "sweep")
            {
                auto &s = sweeps.back();
                if (key == "variable")
                    s.variable = e, s.has_variable = true;
                else if (key == "values")
                    s.values = e, s.has_values = true;
                else if (section_keys().count(key))
                    s.assignments.emplace_back(key, e);
                else
                    throw ParseError("unknown field '" + key + "'", line_no);
                continue;
            }

            const auto it = section_keys().find(key);
            if (it == section_keys().end() || it->second != section)
                throw ParseError("unknown field '" + key + "' in [" + section + "]", line_no);
            base.emplace_back(key, e);
        }

        SweepSpec proto;
        for (const auto &[k, e] : base)
            apply(proto, k, e);

        std::vector<SweepSpec> out;
        if (sweeps.empty())
        {
            // a single operating point
            SweepSpec s = proto;
            s.name = "point";
            s.variable = SweepVariable::b;
            s.values = {{double(s.base.b), 0, 0, std::to_string(s.base.b)}};
            out.push_back(s);
        }
        for (const auto &sw : sweeps)
        {
            SweepSpec s = proto;
            s.name = sw.name;
            for (const auto &[k, e] : sw.assignments)
                apply(s, k, e);
            if (!sw.has_variable)
                throw ParseError("sweep '" + sw.name + "' needs a 'variable' field", sw.line);
            if (!sw.has_values)
                throw ParseError("sweep '" + sw.name + "' needs a 'values' field", sw.line);
            try
            {
                s.variable = parse_sweep_variable(sw.variable.value);
            }
            catch (const ValidationError &ex)
            {
                throw ParseError(ex.what(), sw.variable.line);
            }
            for (const auto &item : split(sw.values.value, ','))
            {
                if (item.empty())
                    throw ParseError("empty entry in 'values'", sw.values.line);
                SweepValue v;
                v.text = item;
                const Entry e{item, sw.values.line};
                if (s.variable == SweepVariable::n_r)
                {
                    std::tie(v.n_v, v.n_h) = to_grid("values", e);
                    v.value = double(v.n_v) * v.n_h;
                }
                else if (s.variable == SweepVariable::l_m || s.variable == SweepVariable::b)
                    v.value = double(to_int("values", e));
                else
                    v.value = to_double("values", e);
                s.values.push_back(v);
            }
            out.push_back(s);
        }

        for (const auto &s : out)
            s.validate();
        return out;
    }
    catch (const ParseError &e)
    {
        ParseError wrapped(source + ": " + e.what());
        wrapped.line = e.line;
        throw wrapped;
    }
    catch (const ValidationError &e)
    {
        throw ValidationError(source + ": " + e.what());
    }
    catch (const DegenerateGeometry &e)
    {
        throw ValidationError(source + ": " + e.what());
    }
}

std::vector<risfb::SweepSpec> risfb::parse_config_file(const std::string &path)
{
    std::ifstream f(path);
    if (!f)
        throw ParseError("cannot open config file '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str(), path);
}
