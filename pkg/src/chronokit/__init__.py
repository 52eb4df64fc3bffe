"""Time series machine learning: elastic distances, collection estimators,
transformers, pipelines and simple forecasters behind one fit/predict API."""

__version__ = "0.1.0"
