"""URL configuration for the recording proxy."""

from django.urls import path, re_path

from . import views

urlpatterns = [
    path('__harvestlab/metrics', views.metrics, name='recorder_metrics'),
    re_path(r'^(?P<path>.*)$', views.intercept, name='intercept'),
]
