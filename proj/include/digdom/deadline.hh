#ifndef DIGDOM_DEADLINE_HH
#define DIGDOM_DEADLINE_HH

#include <chrono>
#include <cstdint>

namespace digdom
{
    using Clock = std::chrono::steady_clock;

    /// Wall-clock budget for one search. The clock is sampled once every 256 polls.
    class Deadline
    {
    public:
        explicit Deadline(std::chrono::milliseconds budget) : _start(Clock::now()), _end(_start + budget) {}

        auto expired() -> bool
        {
            if (_expired)
                return true;
            if ((++_polls & 0xff) == 0 && Clock::now() >= _end)
                _expired = true;
            return _expired;
        }

        auto has_expired() const -> bool { return _expired; }
        auto elapsed() const -> std::chrono::nanoseconds { return Clock::now() - _start; }

    private:
        Clock::time_point _start, _end;
        std::uint64_t _polls = 0;
        bool _expired = false;
    };
}

#endif
