"""Holomorphy charts and polynomiality checks."""

from .charts import (Chart, atlas, chart, chart_ids, chart_expression, check_polynomiality,
                     verify_charts, chart_round_trip, negative_control, TARGETS)

__all__ = ['Chart', 'atlas', 'chart', 'chart_ids', 'chart_expression', 'check_polynomiality',
           'verify_charts', 'chart_round_trip', 'negative_control', 'TARGETS']
