"""The catalog of separable webs and their coordinate charts."""
from .records import (WebRecord, ChartRecord, Chain, Box, chart_map,
                      chart_metric_eval, pullback_residual, region_contains,
                      chart_invert, sample_triple)
from .webs import list_webs, list_charts, web_by_id, charts_for_web
from .export import catalog_dict, catalog_json, surface_csv

__all__ = [
    "WebRecord", "ChartRecord", "Chain", "Box",
    "chart_map", "chart_metric_eval", "pullback_residual",
    "region_contains", "chart_invert", "sample_triple",
    "list_webs", "list_charts", "web_by_id", "charts_for_web",
    "catalog_dict", "catalog_json", "surface_csv",
]
